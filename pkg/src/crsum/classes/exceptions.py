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
CRSum - Exceptions
"""

from __future__ import annotations

from typing import Any


class CRSumException(Exception):
    """
    Base CRSum Exception
    """

    def __init__(self, message):
        """
        Initialize
        :param message:
        """
        super().__init__(message)

        # Set Message
        self.message = message


class DomainError(CRSumException, ValueError):
    """
    Argument outside the domain of an arithmetic function
    """


class ConfigurationException(CRSumException):
    """
    Configuration Exception
    """


class MalformedInput(CRSumException):
    """
    Malformed coefficient sequence or report input
    """


class NonIntegralResult(CRSumException):
    """
    Closed form did not divide evenly
    """

    def __init__(self, message, value):
        """
        Initialize
        :param message:
        :param value: the exact rational that failed to be an integer
        """
        super().__init__(message)
        self.value = value


class ToleranceExceeded(CRSumException):
    """
    Trigonometric oracle could not round unambiguously
    """

    def __init__(self, message, residual: float, precision: int):
        """
        Initialize
        :param message:
        :param residual: observed distance from the nearest integer
        :param precision: working precision in bits
        """
        super().__init__(message)
        self.residual = residual
        self.precision = precision


class HypothesisViolated(CRSumException):
    """
    Point fails the precondition of an identity
    """

    def __init__(self, message, identity: str, point: tuple[Any, ...]):
        """
        Initialize
        :param message:
        :param identity: identity id
        :param point: offending input point
        """
        super().__init__(message)
        self.identity = identity
        self.point = point


class SupportViolation(CRSumException):
    """
    Coefficient sequence is nonzero outside its admissible support
    """

    def __init__(self, message, index: int):
        """
        Initialize
        :param message:
        :param index: first offending index
        """
        super().__init__(message)
        self.index = index
