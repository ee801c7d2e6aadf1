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
Cohen-Ramanujan Sums

Exact evaluation of c_k^(s)(n) by independent routes (Mobius divisor sum,
prime-power product, Hoelder-type quotient) and the mu-twisted identities built
on top of it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from crsum.classes.arithmetic import (
    core,
    divisors,
    factorize,
    jordan_totient,
    mobius,
    require_positive,
    squarefree_divisors,
    star,
)
from crsum.classes.exceptions import NonIntegralResult
from crsum.logger import get_logger

logger = get_logger(__name__)

CRValue = int


@dataclass(frozen=True, order=True)
class CRQuery:
    """The triple (k, n, s) of c_k^(s)(n)."""

    k: int
    n: int
    s: int

    def __post_init__(self) -> None:
        require_positive("k", self.k)
        require_positive("n", self.n)
        require_positive("s", self.s)


def cr_mobius(q: CRQuery) -> CRValue:
    """
    Canonical route: c_k^(s)(n) = sum over d | k with d^s | n of mu(k/d) d^s.

    :param q: query triple
    :return: exact integer value
    """
    k, n, s = q.k, q.n, q.s
    total = 0
    # Only k/d squarefree contributes, so d runs over k / (squarefree divisors of k).
    for e in squarefree_divisors(k):
        d = k // e
        ds = d**s
        if n % ds == 0:
            total += mobius(e) * ds
    return total


def cr_sum(k: int, n: int, s: int) -> CRValue:
    """Shorthand for cr_mobius(CRQuery(k, n, s))."""
    return cr_mobius(CRQuery(k, n, s))


def cr_multiplicative(q: CRQuery) -> CRValue:
    """
    Product over p^j || k of the prime-power values.

    Each factor is p^(sj) - p^(s(j-1)) when p^(sj) | n, -p^(s(j-1)) when
    p^(s(j-1)) | n but p^(sj) does not, and 0 otherwise.
    """
    n, s = q.n, q.s
    result = 1
    for p, j in factorize(q.k).pairs:
        lower = p ** (s * (j - 1))
        upper = lower * p**s
        if n % upper == 0:
            result *= upper - lower
        elif n % lower == 0:
            result *= -lower
        else:
            return 0
    return result


def hoelder_literal_value(q: CRQuery) -> Fraction:
    """J_s(n) mu(m) / J_s(m) with m = n / gcd(k, n), read exactly as printed."""
    m = q.n // gcd(q.k, q.n)
    return Fraction(jordan_totient(q.s, q.n) * mobius(m), jordan_totient(q.s, m))


def hoelder_corrected_value(q: CRQuery) -> Fraction:
    """J_s(k) mu(m) / J_s(m) with m = k / d and d the largest divisor of k with d^s | n."""
    fn = factorize(q.n)
    d = 1
    for p, e in factorize(q.k).pairs:
        d *= p ** min(e, fn.exponent(p) // q.s)
    m = q.k // d
    return Fraction(jordan_totient(q.s, q.k) * mobius(m), jordan_totient(q.s, m))


def cr_hoelder(q: CRQuery, literal: bool = False) -> CRValue:
    """
    Hoelder-type closed form.

    literal=False evaluates the corrected quotient that agrees with cr_mobius
    everywhere. literal=True evaluates the printed form, which does not; its
    disagreements are what the audit sweep records.

    :raises NonIntegralResult: the quotient is not an integer at this input
    """
    value = hoelder_literal_value(q) if literal else hoelder_corrected_value(q)
    if value.denominator != 1:
        raise NonIntegralResult(
            f"Hoelder form ({'literal' if literal else 'corrected'}) is not integral at {q}: {value}",
            value,
        )
    result = int(value)
    if literal:
        canonical = cr_mobius(q)
        if result != canonical:
            logger.debug("Literal Hoelder form gives %d, canonical value is %d at %s", result, canonical, q)
    return result


def twisted(q: CRQuery) -> int:
    """mu(k) * c_k^(s)(n)."""
    return mobius(q.k) * cr_mobius(q)


def twisted_sum_rhs(k: int, n: int, s: int) -> int:
    """sum over d^s | (k^s, n)_s of d^s mu(d)."""
    total = 0
    for d in squarefree_divisors(k):
        ds = d**s
        if n % ds == 0:
            total += ds * mobius(d)
    return total


def vanishing_applies(k: int, n: int, s: int) -> bool:
    """True when (k*)^s does not divide n, forcing c_k^(s)(n) = 0."""
    return n % star(k) ** s != 0


def core_shift_sides(k: int, n: int, s: int) -> tuple[int, int]:
    """(c_k(n (k*)^s), (k*)^s c_core(k)(n))."""
    shift = star(k) ** s
    return cr_sum(k, n * shift, s), shift * cr_sum(core(k), n, s)


def reciprocity_sides(k: int, n: int, s: int) -> tuple[Fraction, Fraction]:
    """
    Both sides of the reciprocity identity.

    mu(core k) / (k*)^s * c_k^(s)(n^s (k*)^s)  vs  mu(core n) / (n*)^s * c_n^(s)(k^s (n*)^s)

    Defined for all positive k and n; for squarefree inputs the core/star
    factors are trivial.
    """
    k_shift = star(k) ** s
    n_shift = star(n) ** s
    lhs = Fraction(mobius(core(k)) * cr_sum(k, n**s * k_shift, s), k_shift)
    rhs = Fraction(mobius(core(n)) * cr_sum(n, k**s * n_shift, s), n_shift)
    return lhs, rhs


def xi_divisor_sum(k: int, n: int, s: int) -> int:
    """sum_{d | k} c_d^(s)(n); equals xi_s(k, n, s)."""
    return sum(cr_sum(d, n, s) for d in divisors(k))
