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
Klee Series Showcase

High-precision partial sums of the Cohen-Ramanujan expansion

    Phi_s(n) zeta(2s) / n = sum_k mu(k) / J_2s(k) * c_k^(s)(n),

its second-variable counterpart obtained through the generic transform, the
printed second-variable display (kept for comparison only), and the coefficient
identity behind both.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, log10
from typing import Any, ClassVar

import mpmath

from crsum.classes.arithmetic import (
    core,
    is_squarefree,
    jordan_totient,
    klee_phi,
    mobius,
    require_positive,
    star,
)
from crsum.classes.config import get_config
from crsum.classes.exceptions import DomainError
from crsum.classes.expansion import DEFAULT_XI_SEMANTICS, CoeffSeq, transform_first_to_second
from crsum.classes.sums import cr_sum
from crsum.constants import MIN_PRECISION, KleeVariant, SupportRule, XiSemantics
from crsum.logger import get_logger

logger = get_logger(__name__)

# Guard bits carried on top of the requested precision
GUARD_BITS = 32


def _resolve_precision(precision: int | None) -> int:
    if precision is None:
        precision = get_config().klee_precision
    if precision < MIN_PRECISION:
        raise DomainError(f"precision must be at least {MIN_PRECISION} bits, got {precision}")
    return precision


def _digits(precision: int) -> int:
    """Decimal digits printed for a value carried at `precision` bits."""
    return max(15, int(precision * log10(2)))


def _abs_difference(a: mpmath.mpf, b: mpmath.mpf, precision: int) -> mpmath.mpf:
    """|a - b| carried at the working precision of the values it compares."""
    with mpmath.workprec(precision + GUARD_BITS):
        return abs(a - b)


def checkpoints(K: int) -> list[int]:
    """Powers of ten up to K, followed by K itself."""
    require_positive("K", K)
    points = []
    p = 1
    while p < K:
        points.append(p)
        p *= 10
    points.append(K)
    return points


def zeta_even_arg(s: int, precision: int | None = None) -> mpmath.mpf:
    """
    zeta(2s) from a direct partial sum and an Euler-Maclaurin tail.

    With N terms summed directly and p Bernoulli corrections the remainder is
    far below 2^(-precision/2) for every s >= 1.

    :param s: half the argument
    :param precision: bits (default from configuration)
    """
    require_positive("s", s)
    precision = _resolve_precision(precision)
    config = get_config()
    cutoff = max(config.zeta_minimum_cutoff, 2 * precision)
    corrections = max(config.zeta_correction_terms, precision // 16)
    sigma = 2 * s

    with mpmath.workprec(precision + GUARD_BITS):
        N = mpmath.mpf(cutoff)
        head = mpmath.fsum(mpmath.mpf(n) ** -sigma for n in range(1, cutoff))
        tail = N ** (1 - sigma) / (sigma - 1) + N**-sigma / 2
        for j in range(1, corrections + 1):
            tail += (
                mpmath.bernoulli(2 * j)
                / mpmath.factorial(2 * j)
                * mpmath.rf(sigma, 2 * j - 1)
                * N ** (-sigma - 2 * j + 1)
            )
        value = head + tail
    logger.debug("zeta(%d) at %d bits: cutoff %d, %d corrections", sigma, precision, cutoff, corrections)
    return value


def klee_coefficient(k: int, s: int) -> Fraction:
    """mu(k) / J_2s(k); zero off the squarefree integers."""
    require_positive("s", s)
    mu = mobius(k)
    if mu == 0:
        return Fraction(0)
    return Fraction(mu, jordan_totient(2 * s, k))


def klee_coefficients(limit: int, s: int) -> CoeffSeq:
    """klee_coefficient(k, s) for k <= limit as a squarefree-supported sequence."""
    return CoeffSeq.from_mapping(
        {k: klee_coefficient(k, s) for k in range(1, limit + 1) if is_squarefree(k)},
        SupportRule.SQUAREFREE_ONLY,
    )


def _identity_terms(k: int, s: int, D: int) -> Iterator[tuple[int, mpmath.mpf]]:
    # mu(kd) vanishes unless gcd(k, d) = 1, where it equals mu(k) mu(d)
    mu_k = mobius(k)
    for d in range(1, D + 1):
        if gcd(d, k) != 1:
            continue
        mu_d = mobius(d)
        if mu_d:
            yield d, mpmath.mpf(mu_k * mu_d) / mpmath.mpf(k * d) ** (2 * s)


def coefficient_identity_check(
    k: int, s: int, D: int, precision: int | None = None
) -> tuple[mpmath.mpf, mpmath.mpf]:
    """
    Both estimates of sum_d mu(kd) / (kd)^2s.

    lhs is the partial sum over d <= D, rhs the closed form
    mu(k) / (J_2s(k) zeta(2s)). Both are zero for non-squarefree k.
    """
    require_positive("k", k)
    require_positive("D", D)
    precision = _resolve_precision(precision)
    zeta = zeta_even_arg(s, precision)
    with mpmath.workprec(precision + GUARD_BITS):
        if mobius(k) == 0:
            return mpmath.mpf(0), mpmath.mpf(0)
        lhs = mpmath.fsum(term for _, term in _identity_terms(k, s, D))
        rhs = mpmath.mpf(mobius(k)) / (jordan_totient(2 * s, k) * zeta)
    return lhs, rhs


@dataclass
class SeriesReport:
    """Partial sums of one series at its checkpoints, with the target value."""

    csv_fields: ClassVar[tuple[str, ...]] = ("k_checkpoint", "partial_sum", "abs_error")

    variant: KleeVariant
    s: int
    n: int
    K: int
    precision: int
    target: mpmath.mpf
    partial_sums: list[tuple[int, mpmath.mpf]] = field(default_factory=list)

    @property
    def final_abs_error(self) -> mpmath.mpf:
        if not self.partial_sums:
            return abs(self.target)
        return _abs_difference(self.partial_sums[-1][1], self.target, self.precision)

    @property
    def final_partial_sum(self) -> mpmath.mpf:
        return self.partial_sums[-1][1] if self.partial_sums else mpmath.mpf(0)

    def _str(self, value: mpmath.mpf) -> str:
        return mpmath.nstr(value, _digits(self.precision))

    def header(self) -> dict[str, Any]:
        return {
            "variant": self.variant.value,
            "n": self.n,
            "s": self.s,
            "K": self.K,
            "precision": self.precision,
            "target": self._str(self.target),
        }

    def rows(self) -> list[dict[str, Any]]:
        return [
            {
                "k_checkpoint": k,
                "partial_sum": self._str(value),
                "abs_error": self._str(_abs_difference(value, self.target, self.precision)),
            }
            for k, value in self.partial_sums
        ]

    def to_dict(self) -> dict[str, Any]:
        data = self.header()
        data["final_abs_error"] = self._str(self.final_abs_error)
        data["partial_sums"] = self.rows()
        return data


@dataclass
class CoefficientReport:
    """Partial sums of the coefficient identity at checkpoints in D."""

    csv_fields: ClassVar[tuple[str, ...]] = ("d_checkpoint", "lhs", "rhs", "abs_difference")

    k: int
    s: int
    D: int
    precision: int
    rhs: mpmath.mpf
    lhs_checkpoints: list[tuple[int, mpmath.mpf]] = field(default_factory=list)

    @property
    def lhs(self) -> mpmath.mpf:
        return self.lhs_checkpoints[-1][1] if self.lhs_checkpoints else mpmath.mpf(0)

    @property
    def abs_difference(self) -> mpmath.mpf:
        return _abs_difference(self.lhs, self.rhs, self.precision)

    def _str(self, value: mpmath.mpf) -> str:
        return mpmath.nstr(value, _digits(self.precision))

    def header(self) -> dict[str, Any]:
        return {
            "variant": KleeVariant.COEFF_IDENTITY.value,
            "k": self.k,
            "s": self.s,
            "D": self.D,
            "precision": self.precision,
            "rhs": self._str(self.rhs),
        }

    def rows(self) -> list[dict[str, Any]]:
        return [
            {
                "d_checkpoint": d,
                "lhs": self._str(value),
                "rhs": self._str(self.rhs),
                "abs_difference": self._str(_abs_difference(value, self.rhs, self.precision)),
            }
            for d, value in self.lhs_checkpoints
        ]

    def to_dict(self) -> dict[str, Any]:
        data = self.header()
        data["lhs"] = self._str(self.lhs)
        data["abs_difference"] = self._str(self.abs_difference)
        data["checkpoints"] = self.rows()
        return data


def coefficient_identity_report(k: int, s: int, D: int, precision: int | None = None) -> CoefficientReport:
    """coefficient_identity_check with the lhs recorded at every checkpoint in D."""
    require_positive("k", k)
    precision = _resolve_precision(precision)
    marks = checkpoints(D)
    _, rhs = coefficient_identity_check(k, s, 1, precision)
    report = CoefficientReport(k=k, s=s, D=D, precision=precision, rhs=rhs)
    with mpmath.workprec(precision + GUARD_BITS):
        total = mpmath.mpf(0)
        terms = dict(_identity_terms(k, s, D)) if mobius(k) else {}
        for d in range(1, D + 1):
            if d in terms:
                total += terms[d]
            if d == marks[len(report.lhs_checkpoints)]:
                report.lhs_checkpoints.append((d, +total))
    return report


def _record(report: SeriesReport, marks: list[int], k: int, total: mpmath.mpf) -> None:
    if k == marks[len(report.partial_sums)]:
        report.partial_sums.append((k, +total))


def klee_series_eval(n: int, s: int, K: int, precision: int | None = None) -> SeriesReport:
    """
    Partial sums of sum_{k <= K} klee_coefficient(k, s) c_k^(s)(n).

    The target is Phi_s(n) zeta(2s) / n.
    """
    require_positive("n", n)
    require_positive("s", s)
    precision = _resolve_precision(precision)
    marks = checkpoints(K)
    zeta = zeta_even_arg(s, precision)

    with mpmath.workprec(precision + GUARD_BITS):
        target = klee_phi(s, n) * zeta / n
        report = SeriesReport(KleeVariant.CR, s, n, K, precision, target)
        total = mpmath.mpf(0)
        for k in range(1, K + 1):
            mu = mobius(k)
            if mu:
                c = cr_sum(k, n, s)
                if c:
                    total += mpmath.mpf(mu * c) / jordan_totient(2 * s, k)
            _record(report, marks, k, total)

    logger.debug("klee cr n=%d s=%d K=%d: error %s", n, s, K, mpmath.nstr(report.final_abs_error, 5))
    return report


def _second_variable_target(n: int, s: int, zeta: mpmath.mpf) -> mpmath.mpf:
    # The second-variable series pairs coefficients with c(n^s)
    return jordan_totient(s, n) * zeta / mpmath.mpf(n) ** s


def klee_cr_prime_eval(n: int, s: int, K: int, precision: int | None = None) -> SeriesReport:
    """
    The second-variable series obtained by transforming the Klee coefficients.

    b(m) = mu(m) klee_coefficient(m, s) = mu(m)^2 / J_2s(m), evaluated as
    mu(core n) / (n*)^s * sum_{k <= K, n* | k} xi(k) b(k/n*) c_n^(s)(k^s)
    with the default xi reading. The target is J_s(n) zeta(2s) / n^s.
    """
    require_positive("n", n)
    require_positive("s", s)
    precision = _resolve_precision(precision)
    marks = checkpoints(K)
    zeta = zeta_even_arg(s, precision)
    n_star = star(n)
    b = transform_first_to_second(klee_coefficients(K // n_star, s))
    weight = n_star if DEFAULT_XI_SEMANTICS == XiSemantics.WEIGHTED else 1

    with mpmath.workprec(precision + GUARD_BITS):
        target = _second_variable_target(n, s, zeta)
        prefactor = mpmath.mpf(mobius(core(n))) / mpmath.mpf(n_star) ** s
        report = SeriesReport(KleeVariant.CR_PRIME, s, n, K, precision, target)
        total = mpmath.mpf(0)
        for k in range(1, K + 1):
            if k % n_star == 0:
                value = b[k // n_star]
                if value:
                    c = cr_sum(n, k**s, s)
                    if c:
                        total += prefactor * weight * c * value.numerator / mpmath.mpf(value.denominator)
            _record(report, marks, k, total)

    logger.debug("klee cr-prime n=%d s=%d K=%d: error %s", n, s, K, mpmath.nstr(report.final_abs_error, 5))
    return report


def klee_cr_prime_literal_eval(n: int, s: int, K: int, precision: int | None = None) -> SeriesReport:
    """
    The second-variable display as printed:
    mu(core n) / (n*)^s * sum_{k <= K, n* | k} c_n^(s)(k^s) / J_2s(k).

    No mu^2 factor and a denominator indexed by k rather than k/n*. Reported
    against the same target as klee_cr_prime_eval so the two can be compared.
    """
    require_positive("n", n)
    require_positive("s", s)
    precision = _resolve_precision(precision)
    marks = checkpoints(K)
    zeta = zeta_even_arg(s, precision)
    n_star = star(n)

    with mpmath.workprec(precision + GUARD_BITS):
        target = _second_variable_target(n, s, zeta)
        prefactor = mpmath.mpf(mobius(core(n))) / mpmath.mpf(n_star) ** s
        report = SeriesReport(KleeVariant.CR_PRIME_LITERAL, s, n, K, precision, target)
        total = mpmath.mpf(0)
        for k in range(1, K + 1):
            if k % n_star == 0:
                c = cr_sum(n, k**s, s)
                if c:
                    total += prefactor * c / mpmath.mpf(jordan_totient(2 * s, k))
            _record(report, marks, k, total)

    logger.debug("klee cr-prime literal n=%d s=%d K=%d: error %s", n, s, K, mpmath.nstr(report.final_abs_error, 5))
    return report
