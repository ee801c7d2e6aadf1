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

"""Tests for constants module."""

from __future__ import annotations

from crsum.constants import (
    DEFAULT_MAX_PRECISION,
    DEFAULT_PRECISION,
    MIN_PRECISION,
    PRECISION_ENV_VAR,
    Direction,
    ExitCode,
    IdentityId,
    KleeVariant,
    Method,
    OutputFormat,
    SupportRule,
    XiSemantics,
)


class TestEnums:
    """Test enum classes."""

    def test_method_enum(self) -> None:
        """Evaluation routes use their command-line spelling."""
        assert Method.MOBIUS == "mobius"
        assert Method.HOELDER_LITERAL == "hoelder-literal"
        assert Method.DIRECT == "direct"

    def test_identity_enum(self) -> None:
        """Every sweepable identity has a distinct id."""
        assert len(IdentityId) == 14
        assert IdentityId("hoelder-literal-audit") is IdentityId.HOELDER_LITERAL_AUDIT

    def test_xi_semantics_enum(self) -> None:
        assert [sem.value for sem in XiSemantics] == ["indicator", "weighted"]

    def test_support_rule_enum(self) -> None:
        assert SupportRule.SQUAREFREE_POWERS == "s-th-powers-of-squarefree"

    def test_direction_enum(self) -> None:
        assert Direction("roundtrip") is Direction.ROUNDTRIP

    def test_klee_variant_enum(self) -> None:
        assert {v.value for v in KleeVariant} == {"cr", "cr-prime", "cr-prime-literal", "coeff-identity"}

    def test_output_format_enum(self) -> None:
        """Test OutputFormat enum."""
        assert OutputFormat.JSON == "json"
        assert OutputFormat.CSV == "csv"
        assert OutputFormat.PRETTY == "pretty"


class TestConstants:
    """Test constant values."""

    def test_exit_codes(self) -> None:
        assert [int(code) for code in ExitCode] == [0, 1, 2, 3, 4]

    def test_precision_bounds(self) -> None:
        """Precision defaults are ordered."""
        assert MIN_PRECISION <= DEFAULT_PRECISION <= DEFAULT_MAX_PRECISION
        assert PRECISION_ENV_VAR == "CRSUM_PRECISION"
