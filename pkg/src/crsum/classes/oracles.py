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
Reference Oracles

Slow, independent evaluations used to adjudicate the fast routes: direct
exponential sums in high precision (mpmath), an exhaustive generalized gcd and
counting definitions of the Jordan and Klee totients. Nothing here calls the
routes it is meant to check.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache
from itertools import product
from math import gcd
from typing import TYPE_CHECKING, Literal

import mpmath

from crsum.classes.exceptions import DomainError, ToleranceExceeded
from crsum.constants import (
    DEFAULT_MAX_PRECISION,
    DEFAULT_PRECISION,
    DEFAULT_RETRY_FACTOR,
    DEFAULT_ROUNDING_TOLERANCE,
    MIN_PRECISION,
)
from crsum.logger import get_logger

if TYPE_CHECKING:
    from crsum.classes.config import CRSumConfig
    from crsum.classes.sums import CRQuery

logger = get_logger(__name__)

# Largest modulus the direct oracles will expand term by term
MAX_DIRECT_TERMS = 10**7


@dataclass(frozen=True)
class OracleConfig:
    """Working precision and rounding tolerance of the trigonometric oracles."""

    precision: int = DEFAULT_PRECISION
    rounding_tolerance: float = DEFAULT_ROUNDING_TOLERANCE
    retry_factor: int = DEFAULT_RETRY_FACTOR
    max_precision: int = DEFAULT_MAX_PRECISION

    def __post_init__(self) -> None:
        if self.precision < MIN_PRECISION:
            raise DomainError(f"precision must be at least {MIN_PRECISION} bits, got {self.precision}")
        if not 0 < self.rounding_tolerance < 0.5:
            raise DomainError(f"rounding_tolerance must lie in (0, 0.5), got {self.rounding_tolerance}")

    @classmethod
    def from_config(cls, config: CRSumConfig) -> OracleConfig:
        """Build from the global configuration (honors CRSUM_PRECISION)."""
        return cls(
            precision=config.precision,
            rounding_tolerance=config.rounding_tolerance,
            retry_factor=config.retry_factor,
            max_precision=config.max_precision,
        )


@lru_cache(maxsize=512)
def _unit_roots(modulus: int, precision: int) -> tuple[tuple[mpmath.mpf, mpmath.mpf], ...]:
    """(cos, sin) of 2*pi*j/modulus for j = 0..modulus-1."""
    with mpmath.workprec(precision):
        return tuple(
            (mpmath.cospi(mpmath.mpf(2 * j) / modulus), mpmath.sinpi(mpmath.mpf(2 * j) / modulus))
            for j in range(modulus)
        )


def _round_exponential_sum(
    residues: tuple[int, ...], modulus: int, n: int, cfg: OracleConfig
) -> tuple[int, float]:
    """Sum e^(2 pi i n h / modulus) over h in residues and round to the nearest integer."""
    if modulus > MAX_DIRECT_TERMS:
        raise DomainError(f"modulus {modulus} exceeds the direct-sum limit {MAX_DIRECT_TERMS}")
    roots = _unit_roots(modulus, cfg.precision)
    step = n % modulus
    with mpmath.workprec(cfg.precision):
        re = mpmath.mpf(0)
        im = mpmath.mpf(0)
        for h in residues:
            c, s = roots[(step * h) % modulus]
            re += c
            im += s
        nearest = int(mpmath.nint(re))
        residual = float(max(abs(im), abs(re - nearest)))
    if residual >= cfg.rounding_tolerance:
        raise ToleranceExceeded(
            f"residual {residual:.3e} exceeds tolerance {cfg.rounding_tolerance:.1e} "
            f"at {cfg.precision} bits (modulus {modulus})",
            residual=residual,
            precision=cfg.precision,
        )
    return nearest, residual


def ggcd_exhaustive(a: int, b: int, s: int) -> int:
    """Largest d^s dividing both a and b, found by scanning d = 1, 2, ..."""
    best = 1
    limit = min(a, b)
    d = 1
    while d**s <= limit:
        ds = d**s
        if a % ds == 0 and b % ds == 0:
            best = ds
        d += 1
    return best


@lru_cache(maxsize=4096)
def _cohen_residues(k: int, s: int) -> tuple[int, ...]:
    modulus = k**s
    return tuple(h for h in range(1, modulus + 1) if ggcd_exhaustive(h, modulus, s) == 1)


@lru_cache(maxsize=4096)
def _reduced_residues(k: int) -> tuple[int, ...]:
    return tuple(m for m in range(1, k + 1) if gcd(m, k) == 1)


def cr_direct(q: CRQuery, cfg: OracleConfig | None = None) -> tuple[int, float]:
    """
    Direct exponential sum for c_k^(s)(n).

    Sums e^(2 pi i n h / k^s) over 1 <= h <= k^s with (h, k^s)_s = 1 in high
    precision and rounds to the nearest integer.

    :param q: query triple
    :param cfg: precision and tolerance
    :return: (rounded value, residual) where residual = max(|imag|, |real - value|)
    :raises ToleranceExceeded: residual not below cfg.rounding_tolerance
    """
    cfg = cfg or OracleConfig()
    return _round_exponential_sum(_cohen_residues(q.k, q.s), q.k**q.s, q.n, cfg)


def cr_direct_adaptive(q: CRQuery, cfg: OracleConfig | None = None) -> tuple[int, float]:
    """cr_direct, retrying with more bits until cfg.max_precision."""
    cfg = cfg or OracleConfig()
    while True:
        try:
            return cr_direct(q, cfg)
        except ToleranceExceeded:
            bigger = cfg.precision * cfg.retry_factor
            if bigger > cfg.max_precision or cfg.retry_factor < 2:
                raise
            logger.debug("Retrying %s at %d bits", q, bigger)
            cfg = replace(cfg, precision=bigger)


def classical_ramanujan_naive(k: int, n: int, cfg: OracleConfig | None = None) -> int:
    """Classical Ramanujan sum: e^(2 pi i m n / k) over 1 <= m <= k with gcd(m, k) = 1."""
    cfg = cfg or OracleConfig()
    value, _ = _round_exponential_sum(_reduced_residues(k), k, n, cfg)
    return value


def _is_s_free(g: int, s: int) -> bool:
    """True when no d >= 2 has d^s | g."""
    d = 2
    while d**s <= g:
        if g % d**s == 0:
            return False
        d += 1
    return True


def totient_counting(s: int, n: int, which: Literal["jordan", "klee"]) -> int:
    """
    Count-based totients.

    jordan: s-tuples (a_1..a_s) mod n with gcd(a_1, ..., a_s, n) = 1.
    klee: 1 <= m <= n with (m, n)_s = 1.
    """
    if which == "jordan":
        return sum(1 for t in product(range(n), repeat=s) if gcd(n, *t) == 1)
    if which == "klee":
        return sum(1 for m in range(1, n + 1) if _is_s_free(gcd(m, n), s))
    raise DomainError(f"unknown totient {which!r}; expected 'jordan' or 'klee'")
