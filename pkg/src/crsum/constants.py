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
Constants and enumerations for CRSum.

Centralized location for identifiers, defaults and exit codes.
"""

from __future__ import annotations

from enum import Enum, IntEnum


class IdentityId(str, Enum):
    """Registered identities the verification harness can sweep."""

    MULT_IN_N = "mult-in-n"
    TWISTED_SUM = "twisted-sum"
    VANISHING = "vanishing"
    CORE_SHIFT = "core-shift"
    SYMMETRY = "symmetry"
    RECIPROCITY = "reciprocity"
    XI_DIVISOR_SUM = "xi-divisor-sum"
    ROUTE_AGREEMENT = "route-agreement"
    HOELDER_LITERAL_AUDIT = "hoelder-literal-audit"
    HOELDER_CORRECTED = "hoelder-corrected"
    ORACLE_AGREEMENT = "oracle-agreement"
    CLASSICAL_REDUCTION = "classical-reduction"
    JORDAN_COUNT = "jordan-count"
    KLEE_COUNT = "klee-count"


class Method(str, Enum):
    """Evaluation routes for a single Cohen-Ramanujan sum."""

    MOBIUS = "mobius"
    MULTIPLICATIVE = "multiplicative"
    HOELDER = "hoelder"
    HOELDER_LITERAL = "hoelder-literal"
    DIRECT = "direct"


class XiSemantics(str, Enum):
    """How the divisibility weight in second-variable series is read."""

    INDICATOR = "indicator"
    WEIGHTED = "weighted"


class Variable(str, Enum):
    """Which argument of the sum carries the series index."""

    FIRST = "first"
    SECOND = "second"


class SupportRule(str, Enum):
    """Admissible support of a coefficient sequence."""

    ANY = "any"
    SQUAREFREE_ONLY = "squarefree-only"
    SQUAREFREE_POWERS = "s-th-powers-of-squarefree"


class Direction(str, Enum):
    """Coefficient transform directions exposed by the expand command."""

    FIRST_TO_SECOND = "first-to-second"
    SECOND_TO_FIRST = "second-to-first"
    ROUNDTRIP = "roundtrip"


class KleeVariant(str, Enum):
    """Reports offered by the klee command."""

    CR = "cr"
    CR_PRIME = "cr-prime"
    CR_PRIME_LITERAL = "cr-prime-literal"
    COEFF_IDENTITY = "coeff-identity"


class OutputFormat(str, Enum):
    """Output format options."""

    JSON = "json"
    CSV = "csv"
    PRETTY = "pretty"


class ExitCode(IntEnum):
    """Process exit codes of the command line front end."""

    OK = 0
    FAILURES = 1
    USAGE = 2
    TOLERANCE = 3
    SUPPORT = 4


# High-precision defaults
DEFAULT_PRECISION = 128
MIN_PRECISION = 64
DEFAULT_ROUNDING_TOLERANCE = 1e-6
DEFAULT_RETRY_FACTOR = 2
DEFAULT_MAX_PRECISION = 1024

# Environment
PRECISION_ENV_VAR = "CRSUM_PRECISION"

# File paths
DEFAULT_CONFIG_FILE = "defaults.yaml"
