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

"""Tests for coefficient payload validation."""

from __future__ import annotations

import pytest

from crsum.classes.validation import ValidationError, ValidationResult, validate_coeffseq_payload


class TestValidationResult:
    """Test the result container."""

    def test_empty_result_is_valid(self) -> None:
        result = ValidationResult("seq.json")
        assert result.is_valid
        assert not result.has_warnings
        assert str(result) == "Validation results for seq.json:\n  All checks passed"

    def test_error_and_warning(self) -> None:
        result = ValidationResult()
        result.add_error("entry[0]", "bad")
        result.add_warning("entry[1]", "odd")
        assert not result.is_valid
        assert result.has_warnings
        assert str(result).splitlines()[1:] == ["  [ERROR] entry[0]: bad", "  [WARNING] entry[1]: odd"]

    def test_to_dict(self) -> None:
        result = ValidationResult("x")
        result.add_info("entry[2]", "dropped")
        data = result.to_dict()
        assert data["is_valid"] is True
        assert data["error_count"] == 0
        assert data["info"] == [{"field": "entry[2]", "message": "dropped", "severity": "info"}]

    def test_error_str(self) -> None:
        assert str(ValidationError("payload", "empty", "warning")) == "[WARNING] payload: empty"


class TestPayloadValidation:
    """Test validate_coeffseq_payload."""

    def test_valid_payload(self) -> None:
        result = validate_coeffseq_payload([[1, 1, 1], [6, -1, 5]])
        assert result.is_valid
        assert not result.has_warnings
        assert not result.info

    def test_empty_payload(self) -> None:
        assert validate_coeffseq_payload([]).is_valid

    def test_not_a_list(self) -> None:
        result = validate_coeffseq_payload({"1": [1, 1]})
        assert [e.field for e in result.errors] == ["payload"]

    @pytest.mark.parametrize(
        "entry",
        [
            [1, 1],
            [1, 1, 1, 1],
            (1, 1, 1),
            [True, 1, 1],
            [1, 1.0, 1],
            [1, 1, "2"],
            [0, 1, 1],
            [-3, 1, 1],
            [1, 1, 0],
            [1, 1, -2],
        ],
    )
    def test_bad_entry(self, entry) -> None:
        result = validate_coeffseq_payload([entry])
        assert not result.is_valid
        assert result.errors[0].field == "entry[0]"

    def test_duplicate_index(self) -> None:
        result = validate_coeffseq_payload([[2, 1, 1], [2, 3, 1]])
        assert [e.field for e in result.errors] == ["entry[1]"]
        assert "duplicate" in result.errors[0].message

    def test_out_of_order_is_a_warning(self) -> None:
        result = validate_coeffseq_payload([[6, 1, 1], [2, 1, 1]])
        assert result.is_valid
        assert [w.field for w in result.warnings] == ["entry[1]"]

    def test_zero_numerator_is_info(self) -> None:
        result = validate_coeffseq_payload([[1, 0, 7]])
        assert result.is_valid
        assert len(result.info) == 1

    def test_every_bad_entry_reported(self) -> None:
        result = validate_coeffseq_payload([[0, 1, 1], [1, 1, 1], [2, 1, 0]], source="seq.json")
        assert len(result.errors) == 2
        assert result.to_dict()["source"] == "seq.json"
