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
Coefficient Calculus for Cohen-Ramanujan Expansions

Exact arithmetic on finitely supported coefficient sequences:

* first-variable series f(n) = sum a(k) c_k^(s)(n^s) and the recursive f/a/b
  correspondence between them,
* Hardy-Wright inversion over s-th power indices,
* the transform to and from second-variable series
  mu(core n) / (n*)^s * sum_{n* | k} xi(k) b(k/n*) c_n^(s)(k^s).

Every series here has finite support, so every identity is an exact finite one.
"""

from __future__ import annotations

import json
import random
from collections import defaultdict
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, ClassVar, Union

from crsum.classes.arithmetic import (
    core,
    divisors,
    integer_root,
    is_squarefree,
    mobius,
    require_positive,
    star,
)
from crsum.classes.exceptions import HypothesisViolated, MalformedInput, SupportViolation
from crsum.classes.sums import cr_sum
from crsum.classes.validation import validate_coeffseq_payload
from crsum.constants import Direction, SupportRule, Variable, XiSemantics
from crsum.logger import get_logger

logger = get_logger(__name__)

Rational = Union[int, Fraction]

DEFAULT_XI_SEMANTICS = XiSemantics.INDICATOR


@dataclass(frozen=True)
class CoeffSeq:
    """
    Finitely supported map from positive integers to exact rationals.

    Only nonzero entries are stored, sorted by index. Missing indices read as 0.
    """

    entries: tuple[tuple[int, Fraction], ...] = ()
    support_rule: SupportRule = SupportRule.ANY
    s: int = 1
    _lookup: dict[int, Fraction] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        require_positive("s", self.s)
        lookup: dict[int, Fraction] = {}
        previous = 0
        for index, value in self.entries:
            require_positive("index", index)
            if index <= previous:
                raise MalformedInput(f"coefficient indices must be strictly increasing, got {index} after {previous}")
            if value == 0:
                raise MalformedInput(f"zero coefficient stored at index {index}")
            _check_support(index, self.support_rule, self.s)
            lookup[index] = Fraction(value)
            previous = index
        object.__setattr__(self, "_lookup", lookup)

    @classmethod
    def from_mapping(
        cls,
        values: Mapping[int, Rational],
        support_rule: SupportRule = SupportRule.ANY,
        s: int = 1,
    ) -> CoeffSeq:
        """
        Build a sequence from any index -> value mapping; zero values are dropped.

        :raises SupportViolation: a nonzero value sits outside support_rule
        """
        entries = tuple((index, Fraction(values[index])) for index in sorted(values) if values[index] != 0)
        return cls(entries, support_rule, s)

    @classmethod
    def delta(cls, index: int = 1, support_rule: SupportRule = SupportRule.ANY, s: int = 1) -> CoeffSeq:
        """The unit sequence supported at a single index."""
        return cls(((index, Fraction(1)),), support_rule, s)

    def __getitem__(self, index: int) -> Fraction:
        return self._lookup.get(index, Fraction(0))

    def __len__(self) -> int:
        return len(self.entries)

    def __bool__(self) -> bool:
        return bool(self.entries)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(index for index, _ in self.entries)

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self._lookup)

    def same_values(self, other: CoeffSeq) -> bool:
        """Equality of the underlying functions, ignoring support tags."""
        return self.entries == other.entries


def _check_support(index: int, rule: SupportRule, s: int) -> None:
    if rule == SupportRule.SQUAREFREE_ONLY and not is_squarefree(index):
        raise SupportViolation(f"nonzero coefficient at non-squarefree index {index}", index)
    if rule == SupportRule.SQUAREFREE_POWERS:
        root = integer_root(index, s)
        if root is None or not is_squarefree(root):
            raise SupportViolation(
                f"nonzero coefficient at index {index}, which is not the {s}-th power of a squarefree integer",
                index,
            )


@dataclass(frozen=True)
class ExpansionSpec:
    """A coefficient sequence together with the series it defines."""

    s: int
    coeffs: CoeffSeq
    variable: Variable = Variable.FIRST
    xi_semantics: XiSemantics = DEFAULT_XI_SEMANTICS

    def __post_init__(self) -> None:
        require_positive("s", self.s)
        object.__setattr__(self, "variable", Variable(self.variable))
        object.__setattr__(self, "xi_semantics", XiSemantics(self.xi_semantics))


# First-variable correspondence


def f_from_a(a: CoeffSeq, s: int, k: int) -> Fraction:
    """f(k) = sum_{d | k} d^s mu(d) a(d^s)."""
    require_positive("s", s)
    total = Fraction(0)
    for d in divisors(k):
        mu = mobius(d)
        if mu:
            coefficient = a[d**s]
            if coefficient:
                total += d**s * mu * coefficient
    return total


def b_from_a(a: CoeffSeq, s: int) -> CoeffSeq:
    """
    b(k^s) = sum_n mu(n) a(n^s k^s); b vanishes off the s-th powers.

    Entries of a at indices that are not s-th powers never enter the sum.
    """
    require_positive("s", s)
    b: dict[int, Fraction] = defaultdict(Fraction)
    for index, value in a.entries:
        root = integer_root(index, s)
        if root is None:
            continue
        # index = (n k)^s: distribute over the factorizations root = n * k
        for k in divisors(root):
            mu = mobius(root // k)
            if mu:
                b[k**s] += mu * value
    return CoeffSeq.from_mapping(b, _power_rule(a, s), s)


def a_from_b(b: CoeffSeq, s: int) -> CoeffSeq:
    """
    a(k^s) = sum_n b(n^s k^s), the inverse of b_from_a.

    :raises SupportViolation: b is nonzero at an index that is not an s-th power
    """
    require_positive("s", s)
    a: dict[int, Fraction] = defaultdict(Fraction)
    for index, value in b.entries:
        root = integer_root(index, s)
        if root is None:
            raise SupportViolation(f"b is nonzero at {index}, which is not a {s}-th power", index)
        for k in divisors(root):
            a[k**s] += value
    return CoeffSeq.from_mapping(a, _power_rule(b, s), s)


def _power_rule(seq: CoeffSeq, s: int) -> SupportRule:
    if seq.support_rule == SupportRule.SQUAREFREE_POWERS and seq.s == s:
        return SupportRule.SQUAREFREE_POWERS
    return SupportRule.ANY


def check_first_variable_identity(a: CoeffSeq, s: int, k: int) -> tuple[Fraction, Fraction]:
    """
    Both sides of mu(k) f(k) = sum_n b(n^s) c_k^(s)(n^s) for squarefree k.

    :return: (mu(k) * f_from_a(a, s, k), series over b_from_a(a, s))
    :raises HypothesisViolated: k is not squarefree
    """
    require_positive("k", k)
    if not is_squarefree(k):
        raise HypothesisViolated(f"k = {k} is not squarefree", "first-variable-identity", (k, s))
    lhs = mobius(k) * f_from_a(a, s, k)
    rhs = Fraction(0)
    for index, value in b_from_a(a, s).entries:
        rhs += value * cr_sum(k, index, s)
    return lhs, rhs


# Series evaluation


def eval_first(spec: ExpansionSpec, n: int, K: int | None = None) -> Fraction:
    """
    sum_{k <= K} a(k) c_k^(s)(n^s).

    :param spec: first-variable expansion
    :param n: evaluation point
    :param K: truncation; None sums the whole support
    """
    if spec.variable != Variable.FIRST:
        raise ValueError("eval_first needs a first-variable expansion")
    require_positive("n", n)
    s = spec.s
    ns = n**s
    total = Fraction(0)
    for k, value in spec.coeffs.entries:
        if K is not None and k > K:
            break
        total += value * cr_sum(k, ns, s)
    return total


def eval_second(spec: ExpansionSpec, n: int, K: int | None = None) -> Fraction:
    """
    mu(core n) / (n*)^s * sum_{k <= K, n* | k} xi(k) b(k / n*) c_n^(s)(k^s).

    Under the indicator reading xi(k) is 1 on multiples of n*; under the
    weighted reading it is n* there.
    """
    if spec.variable != Variable.SECOND:
        raise ValueError("eval_second needs a second-variable expansion")
    require_positive("n", n)
    s = spec.s
    n_star = star(n)
    weight = n_star if spec.xi_semantics == XiSemantics.WEIGHTED else 1
    total = Fraction(0)
    for m, value in spec.coeffs.entries:
        k = m * n_star
        if K is not None and k > K:
            break
        total += weight * value * cr_sum(n, k**s, s)
    return Fraction(mobius(core(n)), n_star**s) * total


# Transforms between the two series


def transform_first_to_second(a: CoeffSeq) -> CoeffSeq:
    """
    b(m) = mu(m) a(m).

    :raises SupportViolation: a is nonzero at a non-squarefree index
    """
    b: dict[int, Fraction] = {}
    for index, value in a.entries:
        mu = mobius(index)
        if mu == 0:
            raise SupportViolation(f"first-variable coefficients must be squarefree-supported, a({index}) = {value}", index)
        b[index] = mu * value
    return CoeffSeq.from_mapping(b, SupportRule.SQUAREFREE_ONLY)


def transform_second_to_first(b: CoeffSeq, s: int) -> CoeffSeq:
    """
    a(k) = sum over m with core(m) = k of alpha(m) (m*)^s,
    alpha(m) = b(m) mu(core m) / (m*)^s.

    The result is supported on squarefree k.
    """
    require_positive("s", s)
    a: dict[int, Fraction] = defaultdict(Fraction)
    for m, value in b.entries:
        k = core(m)
        shift = star(m) ** s
        alpha = Fraction(value * mobius(k), shift)
        a[k] += alpha * shift
    return CoeffSeq.from_mapping(a, SupportRule.SQUAREFREE_ONLY)


# xi adjudication


@dataclass(frozen=True)
class Counterexample:
    """First disagreement found for one xi reading."""

    sample: int
    s: int
    n: int
    first: Fraction
    second: Fraction

    def to_dict(self) -> dict[str, Any]:
        return {
            "sample": self.sample,
            "s": self.s,
            "n": self.n,
            "first_variable": str(self.first),
            "second_variable": str(self.second),
        }


@dataclass
class AdjudicationResult:
    """Which xi reading makes the two series agree on every sample."""

    samples: int
    s_values: tuple[int, ...]
    n_max: int
    cases: int = 0
    passed: dict[XiSemantics, bool] = field(default_factory=dict)
    counterexamples: dict[XiSemantics, Counterexample | None] = field(default_factory=dict)

    @property
    def decisive(self) -> bool:
        return sum(self.passed.values()) == 1

    @property
    def winner(self) -> XiSemantics | None:
        """The single passing reading, or None when the outcome is not decisive."""
        if not self.decisive:
            return None
        return next(sem for sem, ok in self.passed.items() if ok)

    def to_dict(self) -> dict[str, Any]:
        winner = self.winner
        return {
            "samples": self.samples,
            "s_values": list(self.s_values),
            "n_max": self.n_max,
            "cases_per_semantics": self.cases,
            "results": {
                sem.value: {
                    "passed": self.passed[sem],
                    "counterexample": None if self.counterexamples[sem] is None else self.counterexamples[sem].to_dict(),
                }
                for sem in XiSemantics
            },
            "decisive": self.decisive,
            "winner": None if winner is None else winner.value,
        }


def adjudicate_xi(samples: Sequence[CoeffSeq], s_values: Iterable[int], n_max: int) -> AdjudicationResult:
    """
    Compare first-variable evaluation with the transformed second-variable
    evaluation under both xi readings.

    :param samples: squarefree-supported first-variable coefficient sequences
    :param s_values: orders to test
    :param n_max: evaluation points 1..n_max
    """
    require_positive("n_max", n_max)
    s_tuple = tuple(sorted(set(s_values)))
    for s in s_tuple:
        require_positive("s", s)
    result = AdjudicationResult(samples=len(samples), s_values=s_tuple, n_max=n_max)

    seconds = [transform_first_to_second(a) for a in samples]
    for semantics in XiSemantics:
        found: Counterexample | None = None
        cases = 0
        for position, (a, b) in enumerate(zip(samples, seconds)):
            for s in s_tuple:
                first_spec = ExpansionSpec(s, a, Variable.FIRST)
                second_spec = ExpansionSpec(s, b, Variable.SECOND, semantics)
                for n in range(1, n_max + 1):
                    cases += 1
                    lhs = eval_first(first_spec, n)
                    rhs = eval_second(second_spec, n)
                    if lhs != rhs and found is None:
                        found = Counterexample(position, s, n, lhs, rhs)
        result.cases = cases
        result.passed[semantics] = found is None
        result.counterexamples[semantics] = found
        logger.debug("xi %s: %s", semantics.value, "pass" if found is None else f"fails at n={found.n}, s={found.s}")

    if result.decisive:
        logger.info("xi adjudication: %s reading wins over %d case(s)", result.winner.value, result.cases)
    else:
        logger.warning("xi adjudication not decisive: %s", {k.value: v for k, v in result.passed.items()})
    return result


# Random sequences


def _random_value(rng: random.Random, bound: int) -> Fraction:
    numerator = 0
    while numerator == 0:
        numerator = rng.randint(-bound, bound)
    return Fraction(numerator, rng.randint(1, bound))


def random_squarefree_coeffseq(
    rng: random.Random,
    max_index: int = 50,
    max_terms: int = 6,
    bound: int = 100,
) -> CoeffSeq:
    """
    Random sequence supported on squarefree indices in [1, max_index].

    Numerators and denominators are bounded by `bound` in absolute value.
    """
    pool = [k for k in range(1, max_index + 1) if is_squarefree(k)]
    size = rng.randint(1, min(max_terms, len(pool)))
    indices = rng.sample(pool, size)
    return CoeffSeq.from_mapping({k: _random_value(rng, bound) for k in indices}, SupportRule.SQUAREFREE_ONLY)


def random_power_coeffseq(
    rng: random.Random,
    s: int,
    max_base: int = 50,
    max_terms: int = 6,
    bound: int = 100,
) -> CoeffSeq:
    """Random sequence supported on r^s with r squarefree and r <= max_base."""
    pool = [r for r in range(1, max_base + 1) if is_squarefree(r)]
    size = rng.randint(1, min(max_terms, len(pool)))
    roots = rng.sample(pool, size)
    return CoeffSeq.from_mapping(
        {r**s: _random_value(rng, bound) for r in roots},
        SupportRule.SQUAREFREE_POWERS,
        s,
    )


# JSON codec


def coeffseq_to_payload(seq: CoeffSeq) -> list[list[int]]:
    """[[index, numerator, denominator], ...] sorted by index."""
    return [[index, value.numerator, value.denominator] for index, value in seq.entries]


def coeffseq_to_json(seq: CoeffSeq) -> str:
    return json.dumps(coeffseq_to_payload(seq))


def coeffseq_from_payload(
    payload: Any,
    support_rule: SupportRule = SupportRule.ANY,
    s: int = 1,
    source: str | None = None,
) -> CoeffSeq:
    """
    Build a CoeffSeq from a decoded JSON payload.

    :raises MalformedInput: the payload fails validation
    :raises SupportViolation: a nonzero entry sits outside support_rule
    """
    validation = validate_coeffseq_payload(payload, source)
    for warning in validation.warnings:
        logger.warning("%s", warning)
    if not validation.is_valid:
        raise MalformedInput("; ".join(str(error) for error in validation.errors))
    values = {index: Fraction(numerator, denominator) for index, numerator, denominator in payload}
    return CoeffSeq.from_mapping(values, support_rule, s)


def coeffseq_from_json(
    text: str,
    support_rule: SupportRule = SupportRule.ANY,
    s: int = 1,
    source: str | None = None,
) -> CoeffSeq:
    """Parse a JSON array of [index, numerator, denominator] triples."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInput(f"invalid JSON{f' in {source}' if source else ''}: {e}") from e
    return coeffseq_from_payload(payload, support_rule, s, source)


def max_discrepancy(left: CoeffSeq, right: CoeffSeq) -> Fraction:
    """max |left(k) - right(k)| over the union of both supports."""
    indices = set(left.support) | set(right.support)
    return max((abs(left[k] - right[k]) for k in indices), default=Fraction(0))


# Reports for the expand command


@dataclass
class ExpandReport:
    """A transform applied to one sequence plus its pointwise comparison table."""

    csv_fields: ClassVar[tuple[str, ...]] = ("n", "first_variable", "second_variable", "difference")

    direction: Direction
    s: int
    xi_semantics: XiSemantics
    source: CoeffSeq
    result: CoeffSeq
    roundtrip: CoeffSeq | None = None
    comparison: list[tuple[int, Fraction, Fraction]] = field(default_factory=list)

    @property
    def max_discrepancy(self) -> Fraction | None:
        """Largest coefficient drift after a roundtrip; None for one-way transforms."""
        if self.roundtrip is None:
            return None
        return max_discrepancy(self.source, self.roundtrip)

    @property
    def max_pointwise_difference(self) -> Fraction:
        return max((abs(first - second) for _, first, second in self.comparison), default=Fraction(0))

    @property
    def exact(self) -> bool:
        return self.max_pointwise_difference == 0 and not self.max_discrepancy

    def header(self) -> dict[str, Any]:
        discrepancy = self.max_discrepancy
        return {
            "direction": self.direction.value,
            "s": self.s,
            "xi_semantics": self.xi_semantics.value,
            "max_discrepancy": None if discrepancy is None else str(discrepancy),
            "max_pointwise_difference": str(self.max_pointwise_difference),
        }

    def rows(self) -> list[dict[str, Any]]:
        return [
            {
                "n": n,
                "first_variable": str(first),
                "second_variable": str(second),
                "difference": str(first - second),
            }
            for n, first, second in self.comparison
        ]

    def to_dict(self) -> dict[str, Any]:
        data = self.header()
        data["input"] = coeffseq_to_payload(self.source)
        data["output"] = coeffseq_to_payload(self.result)
        data["roundtrip"] = None if self.roundtrip is None else coeffseq_to_payload(self.roundtrip)
        data["comparison"] = self.rows()
        return data


def build_expand_report(
    seq: CoeffSeq,
    direction: Direction,
    s: int,
    n_max: int,
    xi_semantics: XiSemantics = DEFAULT_XI_SEMANTICS,
) -> ExpandReport:
    """
    Run one transform direction and tabulate both series for n <= n_max.

    first-to-second and roundtrip read `seq` as first-variable coefficients;
    second-to-first reads it as second-variable coefficients.

    :raises SupportViolation: first-variable input with non-squarefree support
    """
    require_positive("n_max", n_max)
    direction = Direction(direction)
    if direction == Direction.SECOND_TO_FIRST:
        a = transform_second_to_first(seq, s)
        b = seq
        result, roundtrip = a, None
    else:
        a = seq
        b = transform_first_to_second(seq)
        result = b
        roundtrip = transform_second_to_first(b, s) if direction == Direction.ROUNDTRIP else None

    first_spec = ExpansionSpec(s, a, Variable.FIRST)
    second_spec = ExpansionSpec(s, b, Variable.SECOND, xi_semantics)
    comparison = [(n, eval_first(first_spec, n), eval_second(second_spec, n)) for n in range(1, n_max + 1)]
    report = ExpandReport(direction, s, XiSemantics(xi_semantics), seq, result, roundtrip, comparison)
    logger.debug("expand %s s=%d: max pointwise difference %s", direction.value, s, report.max_pointwise_difference)
    return report
