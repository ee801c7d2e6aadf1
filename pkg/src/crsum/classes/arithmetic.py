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
Elementary Arithmetic Functions

Exact integer implementations of the factorization-based functions every other
module consumes: Mobius, Jordan and Klee totients, the generalized gcd, core/star
decomposition, s-exponents and the xi weights.
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from functools import lru_cache
from itertools import cycle
from math import gcd, prod
from typing import TypeVar

from crsum.classes.exceptions import DomainError

T = TypeVar("T")

# Gaps between successive integers coprime to 30, starting at 7
_WHEEL_GAPS = (4, 2, 4, 2, 4, 6, 2, 6)

FACTOR_CACHE_SIZE = 1 << 18


def require_positive(name: str, value: int) -> int:
    """Return value unchanged, or raise DomainError unless it is an integer >= 1."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{name} must be an integer, got {value!r}")
    if value < 1:
        raise DomainError(f"{name} must be a positive integer, got {value}")
    return value


@dataclass(frozen=True)
class Factorization:
    """Canonical prime factorization; the empty tuple represents 1."""

    pairs: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        """Reconstructed integer."""
        return prod(p**e for p, e in self.pairs)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    def exponent(self, p: int) -> int:
        """Exponent of p (0 when p does not divide)."""
        for q, e in self.pairs:
            if q == p:
                return e
        return 0

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)


@lru_cache(maxsize=FACTOR_CACHE_SIZE)
def _factor_pairs(n: int) -> tuple[tuple[int, int], ...]:
    pairs: list[tuple[int, int]] = []
    for p in (2, 3, 5):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            pairs.append((p, e))

    p = 7
    gaps = cycle(_WHEEL_GAPS)
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            pairs.append((p, e))
        p += next(gaps)

    if n > 1:
        pairs.append((n, 1))
    return tuple(pairs)


def factorize(n: int) -> Factorization:
    """
    Factor n by trial division over a 2-3-5 wheel.

    Results are memoized, which is what keeps grid sweeps fast.

    :param n: positive integer
    :return: Factorization with strictly increasing primes
    """
    require_positive("n", n)
    return Factorization(_factor_pairs(n))


def is_prime(n: int) -> bool:
    require_positive("n", n)
    return n > 1 and _factor_pairs(n) == ((n, 1),)


def mobius(n: int) -> int:
    """Mobius function: 0 on non-squarefree n, otherwise (-1)^omega(n)."""
    pairs = factorize(n).pairs
    if any(e > 1 for _, e in pairs):
        return 0
    return -1 if len(pairs) % 2 else 1


def is_squarefree(n: int) -> bool:
    return all(e == 1 for _, e in factorize(n).pairs)


def omega(n: int) -> int:
    """Number of distinct prime divisors."""
    return len(factorize(n))


def jordan_totient(s: int, n: int) -> int:
    """
    Jordan totient J_s(n) = n^s * prod_{p | n} (1 - p^-s), computed exactly.

    :param s: order, J_1 is Euler's phi
    :param n: argument
    """
    require_positive("s", s)
    return prod(p ** (s * (e - 1)) * (p**s - 1) for p, e in factorize(n).pairs)


def klee_phi(s: int, n: int) -> int:
    """
    Klee's function Phi_s(n) = n * prod_{p^s | n} (1 - p^-s).

    Counts 1 <= m <= n with (m, n)_s = 1; Phi_s(n^s) == J_s(n).
    """
    require_positive("s", s)
    result = 1
    for p, e in factorize(n).pairs:
        if e >= s:
            result *= p ** (e - s) * (p**s - 1)
        else:
            result *= p**e
    return result


def e_p(n: int, p: int) -> int:
    """Exact exponent of the prime p in n."""
    require_positive("n", n)
    if p < 2 or not is_prime(p):
        raise DomainError(f"p must be prime, got {p}")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def e_p_s(n: int, p: int, s: int) -> int:
    """Largest a with p^(a*s) | n, i.e. floor(e_p(n) / s)."""
    require_positive("s", s)
    return e_p(n, p) // s


def generalized_gcd(a: int, b: int, s: int) -> int:
    """
    Generalized gcd (a, b)_s: the largest s-th power d^s dividing both a and b.

    Returns d^s itself, built prime by prime from the factorizations.
    """
    require_positive("a", a)
    require_positive("b", b)
    require_positive("s", s)
    fb = factorize(b)
    result = 1
    for p, ea in factorize(a).pairs:
        k = min(ea // s, fb.exponent(p) // s)
        if k:
            result *= p ** (s * k)
    return result


def core(n: int) -> int:
    """Largest squarefree divisor of n."""
    return prod(factorize(n).primes)


def star(n: int) -> int:
    """n / core(n)."""
    return n // core(n)


@lru_cache(maxsize=FACTOR_CACHE_SIZE)
def _divisor_tuple(n: int) -> tuple[int, ...]:
    divs = [1]
    for p, e in _factor_pairs(n):
        powers = [p**i for i in range(1, e + 1)]
        divs = divs + [d * q for d in divs for q in powers]
    return tuple(sorted(divs))


def divisors(n: int) -> list[int]:
    """All divisors of n in increasing order."""
    require_positive("n", n)
    return list(_divisor_tuple(n))


def squarefree_divisors(n: int) -> list[int]:
    """Divisors of core(n), increasing."""
    return divisors(core(n))


def xi(d: int, k: int) -> int:
    """Weighted divisibility indicator: d when d | k, else 0."""
    require_positive("d", d)
    require_positive("k", k)
    return d if k % d == 0 else 0


def xi_indicator(d: int, k: int) -> int:
    """Plain divisibility indicator: 1 when d | k, else 0."""
    require_positive("d", d)
    require_positive("k", k)
    return 1 if k % d == 0 else 0


def xi_s(d: int, n: int, s: int) -> int:
    """d^s when d^s | n, else 0."""
    require_positive("d", d)
    require_positive("n", n)
    require_positive("s", s)
    ds = d**s
    return ds if n % ds == 0 else 0


def mobius_transform(table: Mapping[int, T]) -> dict[int, T]:
    """
    g(k) = sum_{d | k} mu(d) f(k/d) over a table indexed 1..N.

    :param table: f as a mapping on the consecutive keys 1..N
    :return: g on the same keys
    """
    result: dict[int, T] = {}
    for k in _table_keys(table):
        total = 0
        for d in divisors(k):
            mu = mobius(d)
            if mu:
                total = total + mu * table[k // d]  # type: ignore[operator]
        result[k] = total  # type: ignore[assignment]
    return result


def divisor_sum_transform(table: Mapping[int, T]) -> dict[int, T]:
    """f(k) = sum_{d | k} g(d); inverse of mobius_transform."""
    result: dict[int, T] = {}
    for k in _table_keys(table):
        total = 0
        for d in divisors(k):
            total = total + table[d]  # type: ignore[operator]
        result[k] = total  # type: ignore[assignment]
    return result


def _table_keys(table: Mapping[int, object]) -> list[int]:
    keys = sorted(table)
    if keys != list(range(1, len(keys) + 1)):
        raise DomainError("function table must be indexed by 1..N without gaps")
    return keys


def coprime(a: int, b: int) -> bool:
    return gcd(a, b) == 1


def integer_root(n: int, s: int) -> int | None:
    """The integer r with r^s == n, or None when n is not an s-th power."""
    require_positive("n", n)
    require_positive("s", s)
    if s == 1:
        return n
    # Newton iteration from above converges to floor(n^(1/s))
    r = 1 << -(-n.bit_length() // s)
    while True:
        nxt = ((s - 1) * r + n // r ** (s - 1)) // s
        if nxt >= r:
            break
        r = nxt
    return r if r**s == n else None
