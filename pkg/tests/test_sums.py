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

"""Tests for Cohen-Ramanujan sum evaluation routes and identities."""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crsum.classes.arithmetic import is_squarefree, mobius, xi_s
from crsum.classes.exceptions import DomainError, NonIntegralResult
from crsum.classes.sums import (
    CRQuery,
    core_shift_sides,
    cr_hoelder,
    cr_mobius,
    cr_multiplicative,
    cr_sum,
    hoelder_corrected_value,
    hoelder_literal_value,
    reciprocity_sides,
    twisted,
    twisted_sum_rhs,
    vanishing_applies,
    xi_divisor_sum,
)

ks = st.integers(min_value=1, max_value=400)
ns = st.integers(min_value=1, max_value=10**5)
ss = st.integers(min_value=1, max_value=3)


class TestCRQuery:
    """Test query validation."""

    @pytest.mark.parametrize("k,n,s", [(0, 1, 1), (1, 0, 1), (1, 1, 0), (-2, 3, 1)])
    def test_rejects_non_positive(self, k: int, n: int, s: int) -> None:
        with pytest.raises(DomainError):
            CRQuery(k, n, s)

    def test_is_ordered_and_hashable(self) -> None:
        assert CRQuery(1, 2, 1) < CRQuery(2, 1, 1)
        assert len({CRQuery(2, 4, 2), CRQuery(2, 4, 2)}) == 1


class TestMobiusRoute:
    """Test the canonical divisor-sum route."""

    @pytest.mark.parametrize(
        "k,n,s,expected",
        [
            (2, 4, 2, 3),
            (1, 7, 3, 1),
            (6, 3, 1, -2),
            (4, 2, 1, -2),
            (3, 1, 1, -1),
        ],
    )
    def test_examples(self, k: int, n: int, s: int, expected: int) -> None:
        assert cr_mobius(CRQuery(k, n, s)) == expected

    def test_value_at_one_is_mobius(self) -> None:
        for k, s in product(range(1, 101), (1, 2, 3)):
            assert cr_sum(k, 1, s) == mobius(k)

    def test_sum_at_multiple_of_power_is_jordan(self) -> None:
        # c_k^(s)(k^s) = J_s(k)
        assert cr_sum(6, 6**2, 2) == 24
        assert cr_sum(12, 12, 1) == 4


class TestMultiplicativeRoute:
    """Test the prime-power product route."""

    @pytest.mark.parametrize(
        "k,n,s,expected",
        [
            (4, 4, 2, -4),
            (4, 2, 2, 0),
            (2, 3, 2, -1),
            (2, 4, 2, 3),
        ],
    )
    def test_examples(self, k: int, n: int, s: int, expected: int) -> None:
        assert cr_multiplicative(CRQuery(k, n, s)) == expected

    @settings(derandomize=True, max_examples=500)
    @given(ks, ns, ss)
    def test_agrees_with_mobius(self, k: int, n: int, s: int) -> None:
        q = CRQuery(k, n, s)
        assert cr_multiplicative(q) == cr_mobius(q)

    def test_route_agreement_small_grid(self) -> None:
        for k, n, s in product(range(1, 41), range(1, 41), (1, 2, 3)):
            q = CRQuery(k, n, s)
            assert cr_multiplicative(q) == cr_mobius(q), q


class TestHoelderForms:
    """Test the corrected and literal Hoelder quotients."""

    def test_corrected_examples(self) -> None:
        assert cr_hoelder(CRQuery(2, 4, 2)) == 3
        assert cr_hoelder(CRQuery(2, 3, 2)) == -1

    def test_literal_disagrees_at_known_point(self) -> None:
        q = CRQuery(2, 4, 2)
        assert hoelder_literal_value(q) == Fraction(-4)
        assert cr_hoelder(q, literal=True) == -4
        assert cr_mobius(q) == 3

    def test_literal_values_are_integral(self) -> None:
        # J_s(m) divides J_s(n) whenever m | n, so the literal form fails by disagreeing, not by dividing unevenly
        for k, n, s in product(range(1, 31), range(1, 31), (1, 2, 3)):
            assert hoelder_literal_value(CRQuery(k, n, s)).denominator == 1

    def test_non_integral_quotient_raises(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setattr("crsum.classes.sums.hoelder_literal_value", lambda q: Fraction(7, 2))
        with pytest.raises(NonIntegralResult) as exc_info:
            cr_hoelder(CRQuery(3, 5, 1), literal=True)
        assert exc_info.value.value == Fraction(7, 2)

    @settings(derandomize=True, max_examples=500)
    @given(ks, ns, ss)
    def test_corrected_agrees_with_mobius(self, k: int, n: int, s: int) -> None:
        q = CRQuery(k, n, s)
        assert hoelder_corrected_value(q) == cr_mobius(q)


class TestTwisted:
    """Test the mu-twisted function and its divisor-sum form."""

    @pytest.mark.parametrize("k,n,s,expected", [(6, 1, 1, 1), (2, 4, 2, -3), (4, 1, 1, 0)])
    def test_examples(self, k: int, n: int, s: int, expected: int) -> None:
        assert twisted(CRQuery(k, n, s)) == expected

    def test_divisor_sum_form_for_squarefree_k(self) -> None:
        for k, n, s in product(range(1, 61), range(1, 81), (1, 2, 3)):
            if is_squarefree(k):
                assert twisted(CRQuery(k, n, s)) == twisted_sum_rhs(k, n, s), (k, n, s)

    def test_multiplicative_in_n(self) -> None:
        for k in (1, 2, 6, 30, 35):
            for m, n in product(range(1, 25), range(1, 25)):
                if gcd(m, n) != 1:
                    continue
                for s in (1, 2, 3):
                    lhs = twisted(CRQuery(k, m * n, s))
                    rhs = twisted(CRQuery(k, m, s)) * twisted(CRQuery(k, n, s))
                    assert lhs == rhs


class TestStructuralIdentities:
    """Test vanishing, core shift, reciprocity and the xi divisor sum."""

    def test_vanishing(self) -> None:
        assert vanishing_applies(4, 3, 1)
        assert cr_sum(4, 3, 1) == 0
        assert not vanishing_applies(4, 2, 1)
        for k, n, s in product(range(1, 61), range(1, 61), (1, 2)):
            if vanishing_applies(k, n, s):
                assert cr_sum(k, n, s) == 0

    def test_core_shift(self) -> None:
        for k, n, s in product(range(1, 41), range(1, 41), (1, 2)):
            lhs, rhs = core_shift_sides(k, n, s)
            assert lhs == rhs

    def test_reciprocity_examples(self) -> None:
        assert reciprocity_sides(4, 3, 1) == (1, 1)
        assert reciprocity_sides(2, 2, 2) == (-3, -3)

    def test_reciprocity_general_inputs(self) -> None:
        for k, n, s in product(range(1, 41), range(1, 41), (1, 2)):
            lhs, rhs = reciprocity_sides(k, n, s)
            assert lhs == rhs, (k, n, s)
            assert isinstance(lhs, Fraction)

    def test_symmetry_for_squarefree(self) -> None:
        for k, n in product(range(1, 41), range(1, 41)):
            if is_squarefree(k) and is_squarefree(n):
                for s in (1, 2):
                    assert mobius(k) * cr_sum(k, n**s, s) == mobius(n) * cr_sum(n, k**s, s)

    def test_xi_divisor_sum(self) -> None:
        for k, n, s in product(range(1, 41), range(1, 81), (1, 2, 3)):
            assert xi_divisor_sum(k, n, s) == xi_s(k, n, s)
