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

"""Tests for the elementary arithmetic functions."""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from crsum.classes.arithmetic import (
    core,
    coprime,
    divisor_sum_transform,
    divisors,
    e_p,
    e_p_s,
    factorize,
    generalized_gcd,
    integer_root,
    is_prime,
    is_squarefree,
    jordan_totient,
    klee_phi,
    mobius,
    mobius_transform,
    omega,
    require_positive,
    squarefree_divisors,
    star,
    xi,
    xi_indicator,
    xi_s,
)
from crsum.classes.exceptions import DomainError

positive = st.integers(min_value=1, max_value=10**6)
small_s = st.integers(min_value=1, max_value=4)


def sympy_mobius(n: int) -> int:
    exponents = sympy.factorint(n).values()
    if any(e > 1 for e in exponents):
        return 0
    return (-1) ** len(exponents)


class TestFactorize:
    """Test factorization against sympy."""

    @settings(derandomize=True, max_examples=300)
    @given(positive)
    def test_matches_sympy(self, n: int) -> None:
        assert dict(factorize(n).pairs) == sympy.factorint(n)

    def test_one_is_empty(self) -> None:
        assert factorize(1).pairs == ()
        assert factorize(1).value == 1

    def test_value_roundtrip(self) -> None:
        f = factorize(2**5 * 3**2 * 7 * 101)
        assert f.value == 2**5 * 3**2 * 7 * 101
        assert f.primes == (2, 3, 7, 101)
        assert f.exponent(3) == 2
        assert f.exponent(5) == 0
        assert len(f) == 4

    def test_large_prime(self) -> None:
        assert factorize(999983).pairs == ((999983, 1),)

    @pytest.mark.parametrize("bad", [0, -3])
    def test_rejects_non_positive(self, bad: int) -> None:
        with pytest.raises(DomainError):
            factorize(bad)

    def test_rejects_bool_and_float(self) -> None:
        with pytest.raises(DomainError):
            require_positive("n", True)
        with pytest.raises(DomainError):
            require_positive("n", 2.0)  # type: ignore[arg-type]


class TestPrimesAndMobius:
    """Test is_prime, mobius, omega and squarefreeness."""

    @pytest.mark.parametrize("n", range(1, 200))
    def test_is_prime(self, n: int) -> None:
        assert is_prime(n) == sympy.isprime(n)

    @settings(derandomize=True, max_examples=300)
    @given(positive)
    def test_mobius_matches_sympy(self, n: int) -> None:
        assert mobius(n) == sympy_mobius(n)

    def test_mobius_small_values(self) -> None:
        assert [mobius(n) for n in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]

    def test_squarefree_and_omega(self) -> None:
        assert is_squarefree(30)
        assert not is_squarefree(12)
        assert omega(1) == 0
        assert omega(360) == 3


class TestTotients:
    """Test Jordan and Klee totients."""

    @settings(derandomize=True, max_examples=200)
    @given(positive)
    def test_jordan_one_is_euler_phi(self, n: int) -> None:
        assert jordan_totient(1, n) == sympy.totient(n)

    @settings(derandomize=True, max_examples=200)
    @given(st.integers(min_value=1, max_value=5000), small_s)
    def test_jordan_divisor_sum(self, n: int, s: int) -> None:
        expected = sum(sympy_mobius(d) * (n // d) ** s for d in sympy.divisors(n))
        assert jordan_totient(s, n) == expected

    @settings(derandomize=True, max_examples=200)
    @given(st.integers(min_value=1, max_value=2000), small_s)
    def test_klee_of_power_is_jordan(self, n: int, s: int) -> None:
        assert klee_phi(s, n**s) == jordan_totient(s, n)

    def test_klee_known_values(self) -> None:
        # s = 2: integers up to 12 with no square factor in common with 12
        assert klee_phi(2, 12) == 9
        assert klee_phi(1, 12) == 4
        assert klee_phi(3, 12) == 12

    def test_jordan_known_values(self) -> None:
        assert jordan_totient(2, 2) == 3
        assert jordan_totient(2, 6) == 24
        assert jordan_totient(4, 2) == 15

    @settings(derandomize=True, max_examples=200)
    @given(st.integers(min_value=1, max_value=3000), st.integers(min_value=1, max_value=3000), small_s)
    def test_jordan_multiplicative(self, a: int, b: int, s: int) -> None:
        if gcd(a, b) == 1:
            assert jordan_totient(s, a * b) == jordan_totient(s, a) * jordan_totient(s, b)


class TestExponentsAndGcd:
    """Test e_p, e_p_s and the generalized gcd."""

    def test_e_p(self) -> None:
        assert e_p(72, 2) == 3
        assert e_p(72, 3) == 2
        assert e_p(72, 5) == 0

    def test_e_p_rejects_small_p(self) -> None:
        with pytest.raises(DomainError):
            e_p(10, 1)

    @pytest.mark.parametrize(("n", "p"), [(16, 4), (36, 6), (30, 15)])
    def test_e_p_rejects_composite_p(self, n: int, p: int) -> None:
        with pytest.raises(DomainError, match="must be prime"):
            e_p(n, p)
        with pytest.raises(DomainError):
            e_p_s(n, p, 2)

    def test_e_p_s(self) -> None:
        assert e_p_s(2**7, 2, 3) == 2
        assert e_p_s(2**2, 2, 3) == 0

    def test_generalized_gcd_examples(self) -> None:
        assert generalized_gcd(16, 48, 2) == 16
        assert generalized_gcd(8, 12, 2) == 4
        assert generalized_gcd(9, 6, 2) == 1
        assert generalized_gcd(12, 18, 1) == 6

    @settings(derandomize=True, max_examples=200)
    @given(st.integers(min_value=1, max_value=10**5), st.integers(min_value=1, max_value=10**5), small_s)
    def test_generalized_gcd_is_largest_common_power(self, a: int, b: int, s: int) -> None:
        g = generalized_gcd(a, b, s)
        root, exact = sympy.integer_nthroot(g, s)
        assert exact
        assert a % g == 0 and b % g == 0
        # No larger s-th power divides both
        for p in sympy.primefactors(gcd(a, b)):
            assert not (a % (g * p**s) == 0 and b % (g * p**s) == 0)
        assert root >= 1


class TestCoreStarDivisors:
    """Test core/star decomposition and divisor enumeration."""

    @settings(derandomize=True, max_examples=200)
    @given(positive)
    def test_core_times_star(self, n: int) -> None:
        assert core(n) * star(n) == n
        assert is_squarefree(core(n))

    def test_core_star_examples(self) -> None:
        assert (core(72), star(72)) == (6, 12)
        assert (core(1), star(1)) == (1, 1)

    @settings(derandomize=True, max_examples=200)
    @given(positive)
    def test_divisors_match_sympy(self, n: int) -> None:
        assert divisors(n) == sympy.divisors(n)

    def test_squarefree_divisors(self) -> None:
        assert squarefree_divisors(12) == [1, 2, 3, 6]

    def test_divisors_returns_fresh_list(self) -> None:
        first = divisors(12)
        first.append(99)
        assert divisors(12) == [1, 2, 3, 4, 6, 12]


class TestXi:
    """Test the divisibility weights."""

    def test_xi(self) -> None:
        assert xi(3, 12) == 3
        assert xi(5, 12) == 0

    def test_xi_indicator(self) -> None:
        assert xi_indicator(3, 12) == 1
        assert xi_indicator(5, 12) == 0

    def test_xi_s(self) -> None:
        assert xi_s(2, 12, 2) == 4
        assert xi_s(3, 12, 2) == 0


class TestMobiusInversion:
    """Test the finite-table Mobius inversion pair."""

    def test_inversion_roundtrip(self) -> None:
        table = {k: Fraction(k * k + 1, k) for k in range(1, 61)}
        assert divisor_sum_transform(mobius_transform(table)) == table
        assert mobius_transform(divisor_sum_transform(table)) == table

    def test_identity_maps_to_phi(self) -> None:
        # sum_{d | k} mu(d) (k/d) = phi(k)
        table = {k: k for k in range(1, 101)}
        assert mobius_transform(table) == {k: jordan_totient(1, k) for k in range(1, 101)}

    def test_requires_consecutive_keys(self) -> None:
        with pytest.raises(DomainError):
            mobius_transform({1: 1, 3: 2})


class TestHelpers:
    """Test coprime and integer_root."""

    def test_coprime(self) -> None:
        assert coprime(8, 15)
        assert not coprime(6, 9)

    @settings(derandomize=True, max_examples=200)
    @given(st.integers(min_value=1, max_value=10**12), small_s)
    def test_integer_root_matches_sympy(self, n: int, s: int) -> None:
        root, exact = sympy.integer_nthroot(n, s)
        assert integer_root(n, s) == (root if exact else None)

    @pytest.mark.parametrize("r", [1, 2, 7, 10, 999])
    @pytest.mark.parametrize("s", [1, 2, 3, 5])
    def test_integer_root_of_powers(self, r: int, s: int) -> None:
        assert integer_root(r**s, s) == r
