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

"""Pytest configuration and fixtures."""

from __future__ import annotations

import logging
import random
from pathlib import Path

import pytest

from crsum.classes.colors import Colors
from crsum.classes.config import CRSumConfig
from crsum.constants import PRECISION_ENV_VAR


@pytest.fixture(autouse=True)
def fresh_config(monkeypatch: pytest.MonkeyPatch):
    """Every test starts from the packaged defaults with no precision override."""
    monkeypatch.delenv(PRECISION_ENV_VAR, raising=False)
    CRSumConfig.reset_instance()
    yield
    CRSumConfig.reset_instance()
    Colors.enable()


@pytest.fixture(autouse=True)
def restore_logging():
    """CLI runs reconfigure the root logger; drop their stderr handler afterwards."""
    root = logging.getLogger()
    level = root.level
    yield
    for handler in root.handlers[:]:
        if type(handler) is logging.StreamHandler:
            root.removeHandler(handler)
    root.setLevel(level)


@pytest.fixture
def rng() -> random.Random:
    """Seeded generator so randomized tests are reproducible."""
    return random.Random(20260101)


@pytest.fixture
def config_file(tmp_path: Path) -> Path:
    """A small user configuration overriding a few defaults."""
    path = tmp_path / "crsum.yaml"
    path.write_text(
        "oracle:\n"
        "  precision: 192\n"
        "sweep:\n"
        "  include_timing: true\n"
        "grids:\n"
        "  reciprocity:\n"
        "    k_max: 12\n"
        "    n_max: 12\n"
        "    s: [1]\n",
        encoding="utf-8",
    )
    return path
