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
Output Formatters for CRSum

Renders verification, expansion and Klee reports as JSON, CSV or pretty text.
JSON and CSV output depends only on the report contents, never on the
environment, so identical runs give identical files.
"""

from __future__ import annotations

import csv
import io
import json
from abc import ABC, abstractmethod
from collections.abc import Sequence
from typing import Any, Union

from crsum.classes.colors import Colors, Symbols
from crsum.classes.expansion import AdjudicationResult, ExpandReport
from crsum.classes.harness import VerificationReport, get_identity
from crsum.classes.klee import CoefficientReport, SeriesReport

Report = Union[VerificationReport, ExpandReport, SeriesReport, CoefficientReport, AdjudicationResult]

# Failures shown per report in pretty output
PRETTY_FAILURE_LIMIT = 10


class BaseFormatter(ABC):
    """Base class for output formatters."""

    @abstractmethod
    def format(self, reports: Sequence[Report]) -> str:
        """
        Format reports for output.

        :param reports: one or more reports of any kind
        :return: Formatted string ending in a newline
        """
        pass


class JSONFormatter(BaseFormatter):
    """JSON output for scripting; a single report is written as an object."""

    def __init__(self, indent: int = 2):
        self.indent = indent

    def format(self, reports: Sequence[Report]) -> str:
        data: Any = [r.to_dict() for r in reports]
        if len(data) == 1:
            data = data[0]
        return json.dumps(data, indent=self.indent) + "\n"


class CSVFormatter(BaseFormatter):
    """CSV output; each report is a block introduced by a '# {json header}' line."""

    def format(self, reports: Sequence[Report]) -> str:
        return "".join(self._format_one(report) for report in reports)

    def _format_one(self, report: Report) -> str:
        if isinstance(report, VerificationReport):
            return self._format_verification(report)
        if isinstance(report, AdjudicationResult):
            return self._format_adjudication(report)
        return self._format_rows(report)

    @staticmethod
    def _format_rows(report: ExpandReport | SeriesReport | CoefficientReport) -> str:
        output = io.StringIO()
        output.write("# " + json.dumps(report.header(), sort_keys=True) + "\n")
        writer = csv.DictWriter(output, fieldnames=list(report.csv_fields), lineterminator="\n")
        writer.writeheader()
        writer.writerows(report.rows())
        return output.getvalue()

    @staticmethod
    def _format_verification(report: VerificationReport) -> str:
        data = report.to_dict()
        header = {key: value for key, value in data.items() if key != "failures"}
        output = io.StringIO()
        output.write("# " + json.dumps(header, sort_keys=True) + "\n")
        writer = csv.DictWriter(output, fieldnames=[*report.fields, "lhs", "rhs"], lineterminator="\n")
        writer.writeheader()
        for failure in report.failures:
            writer.writerow({**dict(zip(report.fields, failure.point)), "lhs": failure.lhs, "rhs": failure.rhs})
        return output.getvalue()

    @staticmethod
    def _format_adjudication(result: AdjudicationResult) -> str:
        data = result.to_dict()
        header = {key: value for key, value in data.items() if key != "results"}
        output = io.StringIO()
        output.write("# " + json.dumps(header, sort_keys=True) + "\n")
        writer = csv.writer(output, lineterminator="\n")
        writer.writerow(["xi_semantics", "passed", "sample", "s", "n", "first_variable", "second_variable"])
        for semantics, entry in data["results"].items():
            ce = entry["counterexample"] or {}
            writer.writerow(
                [
                    semantics,
                    entry["passed"],
                    ce.get("sample", ""),
                    ce.get("s", ""),
                    ce.get("n", ""),
                    ce.get("first_variable", ""),
                    ce.get("second_variable", ""),
                ]
            )
        return output.getvalue()


class PrettyFormatter(BaseFormatter):
    """Human-readable text with PASS/FAIL coloring."""

    def format(self, reports: Sequence[Report]) -> str:
        blocks = []
        for report in reports:
            if isinstance(report, VerificationReport):
                blocks.append(self._format_verification(report))
            elif isinstance(report, ExpandReport):
                blocks.append(self._format_expand(report))
            elif isinstance(report, SeriesReport):
                blocks.append(self._format_series(report))
            elif isinstance(report, CoefficientReport):
                blocks.append(self._format_coefficients(report))
            else:
                blocks.append(self._format_adjudication(report))
        return "\n\n".join(blocks) + "\n"

    def _format_verification(self, report: VerificationReport) -> str:
        expected = get_identity(report.identity).expect_failures
        grid = report.grid
        lines = [
            f"{Colors.format_status(report.passed, expected)}  {Colors.bold(report.identity.value)}",
            f"  grid: k <= {grid.k_max}, n <= {grid.n_max}, s in {{{', '.join(map(str, grid.s_set))}}}"
            + (f", filters: {', '.join(sorted(f.value for f in grid.filters))}" if grid.filters else ""),
            f"  checked: {report.cases_checked}  skipped: {report.skipped}  failures: {report.failure_count}",
        ]
        if report.wall_time is not None:
            lines.append(f"  wall time: {report.wall_time:.3f}s")
        for failure in report.failures[:PRETTY_FAILURE_LIMIT]:
            inputs = ", ".join(f"{k}={v}" for k, v in zip(report.fields, failure.point))
            lines.append(f"  {Symbols.BULLET} {inputs}: {Colors.red(failure.lhs)} != {Colors.red(failure.rhs)}")
        if report.failure_count > PRETTY_FAILURE_LIMIT:
            lines.append(Colors.dim(f"  ... {report.failure_count - PRETTY_FAILURE_LIMIT} more"))
        return "\n".join(lines)

    def _format_expand(self, report: ExpandReport) -> str:
        lines = [
            f"{Colors.format_status(report.exact)}  {Colors.bold('expand ' + report.direction.value)}"
            f"  (s={report.s}, xi={report.xi_semantics.value})",
            f"  input:  {_render_seq(report.source.entries)}",
            f"  output: {_render_seq(report.result.entries)}",
        ]
        if report.roundtrip is not None:
            lines.append(f"  back:   {_render_seq(report.roundtrip.entries)}")
            lines.append(f"  max coefficient discrepancy: {report.max_discrepancy}")
        lines.append(f"  max pointwise difference over n <= {len(report.comparison)}: {report.max_pointwise_difference}")
        return "\n".join(lines)

    def _format_series(self, report: SeriesReport) -> str:
        header = report.header()
        lines = [
            Colors.bold(f"klee {report.variant.value}  n={report.n} s={report.s} K={report.K}"),
            f"  target: {header['target']}",
            f"  {'k':>10}  {'partial sum':<44} abs error",
            "  " + Symbols.BOX_H_LIGHT * 72,
        ]
        for row in report.rows():
            lines.append(f"  {row['k_checkpoint']:>10}  {row['partial_sum']:<44} {Colors.cyan(row['abs_error'])}")
        return "\n".join(lines)

    def _format_coefficients(self, report: CoefficientReport) -> str:
        header = report.header()
        lines = [
            Colors.bold(f"klee coeff-identity  k={report.k} s={report.s} D={report.D}"),
            f"  rhs: {header['rhs']}",
            f"  {'d':>10}  {'lhs':<44} abs difference",
            "  " + Symbols.BOX_H_LIGHT * 72,
        ]
        for row in report.rows():
            lines.append(f"  {row['d_checkpoint']:>10}  {row['lhs']:<44} {Colors.cyan(row['abs_difference'])}")
        return "\n".join(lines)

    def _format_adjudication(self, result: AdjudicationResult) -> str:
        lines = [
            Colors.bold(f"xi adjudication over {result.samples} sample(s), n <= {result.n_max}"),
        ]
        for semantics, passed in result.passed.items():
            line = f"  {Colors.format_status(passed)}  {semantics.value}"
            ce = result.counterexamples[semantics]
            if ce is not None:
                line += f"  (sample {ce.sample}, s={ce.s}, n={ce.n}: {ce.first} != {ce.second})"
            lines.append(line)
        winner = result.winner
        lines.append(f"  winner: {winner.value if winner else 'none (not decisive)'}")
        return "\n".join(lines)


def _render_seq(entries: Sequence[tuple[int, Any]], limit: int = 8) -> str:
    shown = ", ".join(f"{index}: {value}" for index, value in entries[:limit])
    more = f", ... ({len(entries) - limit} more)" if len(entries) > limit else ""
    return "{" + shown + more + "}"


def get_formatter(format_type: str, **kwargs) -> BaseFormatter:
    """
    Get formatter by type name.

    :param format_type: Format type (json, csv, pretty)
    :param kwargs: Additional formatter arguments
    :return: Formatter instance
    """
    formatters = {
        "json": JSONFormatter,
        "csv": CSVFormatter,
        "pretty": PrettyFormatter,
    }

    formatter_class = formatters.get(format_type.lower())
    if formatter_class is None:
        raise ValueError(f"Unknown format type: {format_type}")

    return formatter_class(**kwargs)
