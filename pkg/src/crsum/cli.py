#
# Copyright (c) 2026 The CRSum Authors.
#
# This file is part of CRSum.
# See the README at the repository root for further info.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#

"""
CRSum CLI - Command Line Interface

Subcommands: eval, verify, expand, klee.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path
from typing import TYPE_CHECKING

from crsum.classes.colors import Colors
from crsum.classes.exceptions import (
    ConfigurationException,
    DomainError,
    HypothesisViolated,
    MalformedInput,
    NonIntegralResult,
    SupportViolation,
    ToleranceExceeded,
)
from crsum.classes.formatter import get_formatter
from crsum.constants import Direction, ExitCode, IdentityId, KleeVariant, Method, OutputFormat, XiSemantics
from crsum.logger import get_logger, setup_logging

if TYPE_CHECKING:
    from argparse import Namespace

logger = get_logger(__name__)


# Version - try to get from package metadata, fallback to _version
try:
    from importlib.metadata import PackageNotFoundError, version

    try:
        __version__ = version("crsum")
    except PackageNotFoundError:
        try:
            from crsum._version import __version__
        except ImportError:
            __version__ = "dev"
except ImportError:
    __version__ = "dev"


def parse_int_list(text: str) -> tuple[int, ...]:
    """Parse a comma list such as "1,2,3" for argparse."""
    try:
        values = tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}") from e
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError(f"expected positive integers, got {text!r}")
    return values


def parse_filters(text: str) -> tuple[str, ...]:
    """Parse a comma list of grid filter names."""
    from crsum.classes.harness import GridFilter

    names = tuple(part.strip() for part in text.split(",") if part.strip())
    known = {f.value for f in GridFilter}
    unknown = [name for name in names if name not in known]
    if unknown:
        raise argparse.ArgumentTypeError(f"unknown filter(s) {', '.join(unknown)}; known: {', '.join(sorted(known))}")
    return names


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from e
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _prepare(args: Namespace) -> None:
    """Logging, colors and configuration shared by every subcommand."""
    setup_logging(verbose=args.verbose, no_color=args.no_color)

    if args.no_color or getattr(args, "out", None):
        Colors.disable()
    else:
        Colors.auto_detect()

    if args.config:
        from crsum.classes.config import configure

        configure(args.config)
        logger.info("Loaded configuration from: %s", args.config)


def _emit(text: str, out: str | None) -> None:
    """Write to --out when given, otherwise stdout."""
    if out:
        Path(out).write_text(text, encoding="utf-8")
        logger.info("Wrote %s", out)
    else:
        sys.stdout.write(text)


def cmd_eval(args: Namespace) -> int:
    """
    Execute eval command.

    Args:
        args: Parsed command-line arguments

    Returns:
        Exit code
    """
    from crsum.classes.config import get_config
    from crsum.classes.oracles import OracleConfig, cr_direct_adaptive
    from crsum.classes.sums import CRQuery, cr_hoelder, cr_mobius, cr_multiplicative

    q = CRQuery(args.k, args.n, args.s)
    method = Method(args.method)
    residual: float | None = None

    if method == Method.MOBIUS:
        value = cr_mobius(q)
    elif method == Method.MULTIPLICATIVE:
        value = cr_multiplicative(q)
    elif method == Method.HOELDER:
        value = cr_hoelder(q)
    elif method == Method.HOELDER_LITERAL:
        value = cr_hoelder(q, literal=True)
        canonical = cr_mobius(q)
        if value != canonical:
            logger.warning(
                "Literal Hoelder form gives %s but c_%d^(%d)(%d) = %s", value, q.k, q.s, q.n, canonical
            )
    else:
        value, residual = cr_direct_adaptive(q, OracleConfig.from_config(get_config()))

    if args.format == OutputFormat.JSON.value:
        data = {"k": q.k, "n": q.n, "s": q.s, "method": method.value, "value": value}
        if residual is not None:
            data["residual"] = f"{residual:.3e}"
        _emit(json.dumps(data, indent=2) + "\n", args.out)
    else:
        text = f"{value}\n"
        if residual is not None:
            text += f"residual {residual:.3e}\n"
        _emit(text, args.out)
    return ExitCode.OK


def cmd_verify(args: Namespace) -> int:
    """Execute verify command."""
    from crsum.classes.harness import GridSpec, default_grid, get_identity, sweep

    if args.all:
        identities = list(IdentityId)
    else:
        identities = [get_identity(args.identity).id]

    reports = []
    for identity in identities:
        base = default_grid(identity)
        grid = GridSpec(
            k_max=args.kmax or base.k_max,
            n_max=args.nmax or base.n_max,
            s_set=args.s or base.s_set,
            filters=frozenset(args.filters) if args.filters is not None else base.filters,
        )
        reports.append(sweep(identity, grid, jobs=args.jobs, include_timing=args.timing or None))

    _emit(get_formatter(args.format).format(reports), args.out)

    failed = [r.identity.value for r in reports if not r.passed and not get_identity(r.identity).expect_failures]
    for report in reports:
        if get_identity(report.identity).expect_failures and report.passed:
            logger.warning("%s found no counterexample on this grid", report.identity.value)
    if failed:
        logger.error("Failures in: %s", ", ".join(failed))
        return ExitCode.FAILURES
    return ExitCode.OK


def cmd_expand(args: Namespace) -> int:
    """Execute expand command."""
    from crsum.classes.expansion import (
        adjudicate_xi,
        build_expand_report,
        coeffseq_from_json,
        coeffseq_to_payload,
        random_squarefree_coeffseq,
    )

    if args.spec_file:
        try:
            text = Path(args.spec_file).read_text(encoding="utf-8")
        except OSError as e:
            raise MalformedInput(f"cannot read {args.spec_file}: {e}") from e
        sequences = [coeffseq_from_json(text, source=args.spec_file)]
    else:
        rng = random.Random(args.seed)
        sequences = [random_squarefree_coeffseq(rng) for _ in range(args.random)]
        logger.debug("Generated %d random sequence(s) from seed %d", len(sequences), args.seed)

    formatter = get_formatter(args.format)

    if args.adjudicate:
        result = adjudicate_xi(sequences, args.s, args.nmax)
        _emit(formatter.format([result]), args.out)
        return ExitCode.OK if result.decisive else ExitCode.FAILURES

    reports = [
        build_expand_report(seq, Direction(args.direction), s, args.nmax, XiSemantics(args.xi))
        for seq in sequences
        for s in args.s
    ]
    _emit(formatter.format(reports), args.out)

    if args.seq_out:
        payloads = [coeffseq_to_payload(r.result) for r in reports]
        Path(args.seq_out).write_text(
            json.dumps(payloads[0] if len(payloads) == 1 else payloads) + "\n",
            encoding="utf-8",
        )
        logger.info("Wrote transformed sequence(s) to %s", args.seq_out)

    inexact = [i for i, r in enumerate(reports) if not r.exact]
    if inexact:
        logger.error("%d of %d transform(s) were not exact", len(inexact), len(reports))
        return ExitCode.FAILURES
    return ExitCode.OK


def cmd_klee(args: Namespace) -> int:
    """Execute klee command."""
    from crsum.classes.klee import (
        coefficient_identity_report,
        klee_cr_prime_eval,
        klee_cr_prime_literal_eval,
        klee_series_eval,
    )

    variant = KleeVariant(args.variant)
    if variant == KleeVariant.COEFF_IDENTITY:
        report = coefficient_identity_report(args.k, args.s, args.D, args.precision)
    else:
        evaluate = {
            KleeVariant.CR: klee_series_eval,
            KleeVariant.CR_PRIME: klee_cr_prime_eval,
            KleeVariant.CR_PRIME_LITERAL: klee_cr_prime_literal_eval,
        }[variant]
        report = evaluate(args.n, args.s, args.K, args.precision)

    _emit(get_formatter(args.format).format([report]), args.out)
    return ExitCode.OK


def add_common_arguments(parser: argparse.ArgumentParser) -> None:
    """Add common arguments to a parser."""
    parser.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        help="Show debug logging on stderr",
    )
    parser.add_argument(
        "--no-color",
        action="store_true",
        help="Disable colored output",
    )
    parser.add_argument(
        "--config",
        metavar="FILE",
        help="Path to YAML config file overriding the packaged defaults",
    )
    parser.add_argument(
        "--out",
        metavar="PATH",
        help="Write the report to PATH instead of stdout",
    )


def create_parser() -> argparse.ArgumentParser:
    """Create argument parser with all subcommands."""
    parser = argparse.ArgumentParser(
        prog="crsum",
        description="CRSum - exact Cohen-Ramanujan sums, identity sweeps and expansion checks",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Evaluate one sum
  crsum eval --k 2 --n 4 --s 2

  # Sweep an identity
  crsum verify --identity reciprocity --kmax 50 --nmax 50 --s 1,2

  # Round-trip random coefficient sequences through both series
  crsum expand --random 20 --seed 1 --direction roundtrip

  # Convergence of the Klee series
  crsum klee --n 1 --s 1 --K 100000 --variant cr
""",
    )

    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    # Eval command
    eval_parser = subparsers.add_parser(
        "eval",
        help="Evaluate c_k^(s)(n) by one route",
        description="Evaluate a single Cohen-Ramanujan sum.",
    )
    add_common_arguments(eval_parser)
    eval_parser.add_argument("--k", type=positive_int, required=True, help="Modulus index k")
    eval_parser.add_argument("--n", type=positive_int, required=True, help="Argument n")
    eval_parser.add_argument("--s", type=positive_int, default=1, help="Order s (default: 1)")
    eval_parser.add_argument(
        "--method",
        choices=[m.value for m in Method],
        default=Method.MOBIUS.value,
        help="Evaluation route (default: mobius)",
    )
    eval_parser.add_argument(
        "--format",
        choices=[OutputFormat.PRETTY.value, OutputFormat.JSON.value],
        default=OutputFormat.PRETTY.value,
        help="Output format (default: pretty, the bare value)",
    )

    # Verify command
    verify_parser = subparsers.add_parser(
        "verify",
        help="Sweep identities over a grid",
        description="Sweep registered identities and report every counterexample.",
    )
    add_common_arguments(verify_parser)
    target = verify_parser.add_mutually_exclusive_group(required=True)
    target.add_argument("--identity", choices=[i.value for i in IdentityId], help="Identity to sweep")
    target.add_argument("--all", action="store_true", help="Sweep every identity on its default grid")
    verify_parser.add_argument("--kmax", type=positive_int, help="Largest k (default: identity grid)")
    verify_parser.add_argument("--nmax", type=positive_int, help="Largest n (default: identity grid)")
    verify_parser.add_argument("--s", type=parse_int_list, help="Comma list of s values, e.g. 1,2")
    verify_parser.add_argument(
        "--filters",
        type=parse_filters,
        help="Comma list of grid filters: squarefree-k, squarefree-n, coprime-pairs",
    )
    verify_parser.add_argument("--jobs", type=positive_int, help="Worker processes (default: config)")
    verify_parser.add_argument("--timing", action="store_true", help="Record wall time in the report")
    verify_parser.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.JSON.value,
        help="Output format (default: json)",
    )

    # Expand command
    expand_parser = subparsers.add_parser(
        "expand",
        help="Transform coefficient sequences between the two series",
        description="Apply the first/second-variable transforms and compare both series pointwise.",
    )
    add_common_arguments(expand_parser)
    source = expand_parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--spec-file", metavar="FILE", help="CoeffSeq JSON: [[index, num, den], ...]")
    source.add_argument("--random", type=positive_int, metavar="N", help="Use N random squarefree-supported sequences")
    expand_parser.add_argument("--seed", type=int, default=0, help="Seed for --random (default: 0)")
    expand_parser.add_argument(
        "--direction",
        choices=[d.value for d in Direction],
        default=Direction.ROUNDTRIP.value,
        help="Transform direction (default: roundtrip)",
    )
    expand_parser.add_argument("--nmax", type=positive_int, default=50, help="Compare series for n <= NMAX")
    expand_parser.add_argument("--s", type=parse_int_list, default=(1,), help="Comma list of s values (default: 1)")
    expand_parser.add_argument(
        "--xi",
        choices=[x.value for x in XiSemantics],
        default=XiSemantics.INDICATOR.value,
        help="Reading of the divisibility weight (default: indicator)",
    )
    expand_parser.add_argument(
        "--adjudicate",
        action="store_true",
        help="Run both xi readings on the inputs and report which one makes the series agree",
    )
    expand_parser.add_argument("--seq-out", metavar="PATH", help="Also write the transformed sequence(s) as JSON")
    expand_parser.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.JSON.value,
        help="Output format (default: json)",
    )

    # Klee command
    klee_parser = subparsers.add_parser(
        "klee",
        help="Convergence reports for the Klee series",
        description="Partial sums of the Klee series and its coefficient identity.",
    )
    add_common_arguments(klee_parser)
    klee_parser.add_argument(
        "--variant",
        choices=[v.value for v in KleeVariant],
        default=KleeVariant.CR.value,
        help="Series to evaluate (default: cr)",
    )
    klee_parser.add_argument("--n", type=positive_int, default=1, help="Argument n (default: 1)")
    klee_parser.add_argument("--s", type=positive_int, default=1, help="Order s (default: 1)")
    klee_parser.add_argument("--K", type=positive_int, default=1000, help="Series truncation (default: 1000)")
    klee_parser.add_argument("--k", type=positive_int, default=1, help="Index k for coeff-identity (default: 1)")
    klee_parser.add_argument("--D", type=positive_int, default=10000, help="Truncation for coeff-identity")
    klee_parser.add_argument("--precision", type=positive_int, help="Working precision in bits (default: config)")
    klee_parser.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.CSV.value,
        help="Output format (default: csv)",
    )

    return parser


COMMANDS = {
    "eval": cmd_eval,
    "verify": cmd_verify,
    "expand": cmd_expand,
    "klee": cmd_klee,
}


def main(argv: list[str] | None = None) -> int:
    """Main entry point."""
    parser = create_parser()

    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 0 for --help/--version and 2 for flag errors
        return int(e.code) if isinstance(e.code, int) else ExitCode.USAGE

    if args.command is None:
        parser.print_help(sys.stderr)
        return ExitCode.USAGE

    try:
        _prepare(args)
        return int(COMMANDS[args.command](args))
    except ToleranceExceeded as e:
        logger.error("%s", e.message)
        return ExitCode.TOLERANCE
    except SupportViolation as e:
        logger.error("%s", e.message)
        return ExitCode.SUPPORT
    except (MalformedInput, ConfigurationException, DomainError, HypothesisViolated) as e:
        logger.error("%s", e.message)
        return ExitCode.USAGE
    except NonIntegralResult as e:
        logger.error("%s", e.message)
        return ExitCode.FAILURES


if __name__ == "__main__":
    sys.exit(main())
