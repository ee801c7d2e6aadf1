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
Configuration Management for CRSum

Provides oracle precision, sweep defaults and default grids loaded from YAML files.
"""

from __future__ import annotations

import os
from pathlib import Path
from typing import Any

import yaml

from crsum.classes.exceptions import ConfigurationException
from crsum.constants import (
    DEFAULT_CONFIG_FILE,
    DEFAULT_MAX_PRECISION,
    DEFAULT_PRECISION,
    DEFAULT_RETRY_FACTOR,
    DEFAULT_ROUNDING_TOLERANCE,
    MIN_PRECISION,
    PRECISION_ENV_VAR,
)
from crsum.logger import get_logger

logger = get_logger(__name__)

# Default configuration (fallback if no config file is given)
DEFAULT_SETTINGS: dict[str, Any] = {
    "oracle": {
        "precision": DEFAULT_PRECISION,
        "rounding_tolerance": DEFAULT_ROUNDING_TOLERANCE,
        "retry_factor": DEFAULT_RETRY_FACTOR,
        "max_precision": DEFAULT_MAX_PRECISION,
    },
    "zeta": {
        "minimum_cutoff": 64,
        "correction_terms": 12,
    },
    "klee": {
        "precision": DEFAULT_PRECISION,
    },
    "sweep": {
        "jobs": 1,
        "include_timing": False,
        "max_listed_failures": 1000,
    },
    "grids": {},
}


class CRSumConfig:
    """
    Configuration class for CRSum.

    Supports loading from YAML files and provides typed access to the values.
    """

    _instance: CRSumConfig | None = None

    def __init__(self, config_path: str | Path | None = None):
        """
        Initialize configuration.

        :param config_path: Optional path to YAML config file
        """
        self._config_path: Path | None = None

        # Packaged defaults first, then the user's file
        self._config: dict = self._deep_copy(DEFAULT_SETTINGS)
        packaged = get_default_config_path()
        if packaged is not None:
            self._config = self._merge_dicts(self._config, self._read_yaml(packaged))

        if config_path:
            self.load_from_file(config_path)

    @classmethod
    def get_instance(cls) -> CRSumConfig:
        """
        Get the singleton instance.

        :return: CRSumConfig instance
        """
        if cls._instance is None:
            cls._instance = cls()
        return cls._instance

    @classmethod
    def reset_instance(cls) -> None:
        """Reset the singleton instance (useful for testing)."""
        cls._instance = None

    @classmethod
    def configure(cls, config_path: str | Path | None = None) -> CRSumConfig:
        """
        Configure the global instance with a config file.

        :param config_path: Path to YAML config file
        :return: Configured CRSumConfig instance
        """
        cls._instance = cls(config_path)
        return cls._instance

    @staticmethod
    def _read_yaml(path: Path) -> dict:
        try:
            with path.open(encoding="utf-8") as f:
                loaded = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ConfigurationException(f"Failed to parse config file {path}: {e}") from e
        if loaded is None:
            return {}
        if not isinstance(loaded, dict):
            raise ConfigurationException(f"Config file {path} must contain a mapping")
        return loaded

    def load_from_file(self, path: str | Path) -> None:
        """
        Load configuration from a YAML file.

        :param path: Path to YAML file
        :raises ConfigurationException: missing or unparsable file
        """
        path = Path(path)

        if not path.exists():
            raise ConfigurationException(f"Config file not found: {path}")

        self._config = self._merge_dicts(self._config, self._read_yaml(path))
        self._config_path = path
        logger.debug("Loaded configuration from %s", path)

    def load_from_dict(self, config: dict) -> None:
        """
        Load configuration from a dictionary.

        :param config: Configuration dictionary
        """
        self._config = self._merge_dicts(self._config, config)

    def _merge_dicts(self, base: dict, override: dict) -> dict:
        """
        Deep merge two dictionaries.

        :param base: Base dictionary
        :param override: Dictionary with override values
        :return: Merged dictionary
        """
        result = self._deep_copy(base)

        for key, value in override.items():
            if key in result and isinstance(result[key], dict) and isinstance(value, dict):
                result[key] = self._merge_dicts(result[key], value)
            else:
                result[key] = value

        return result

    def _deep_copy(self, d: dict) -> dict:
        """Deep copy a dictionary."""
        result = {}
        for key, value in d.items():
            if isinstance(value, dict):
                result[key] = self._deep_copy(value)
            elif isinstance(value, list):
                result[key] = list(value)
            else:
                result[key] = value
        return result

    def get(self, *keys: str, default: Any = None) -> Any:
        """
        Get a nested configuration value.

        :param keys: Path to the value (e.g., "oracle", "precision")
        :param default: Default value if not found
        :return: Configuration value
        """
        value: Any = self._config
        for key in keys:
            if isinstance(value, dict) and key in value:
                value = value[key]
            else:
                return default
        return value

    # Oracle settings
    @property
    def precision(self) -> int:
        """Working precision in bits; the CRSUM_PRECISION environment variable wins."""
        raw = os.environ.get(PRECISION_ENV_VAR)
        if raw is None:
            value = self.get("oracle", "precision", default=DEFAULT_PRECISION)
        else:
            try:
                value = int(raw)
            except ValueError as e:
                raise ConfigurationException(f"{PRECISION_ENV_VAR} must be an integer, got {raw!r}") from e
        if int(value) < MIN_PRECISION:
            raise ConfigurationException(f"precision must be at least {MIN_PRECISION} bits, got {value}")
        return int(value)

    @property
    def rounding_tolerance(self) -> float:
        """Largest accepted rounding residual of the trigonometric oracles."""
        value = float(self.get("oracle", "rounding_tolerance", default=DEFAULT_ROUNDING_TOLERANCE))
        if not 0 < value < 0.5:
            raise ConfigurationException(f"rounding_tolerance must lie in (0, 0.5), got {value}")
        return value

    @property
    def retry_factor(self) -> int:
        """Precision multiplier for oracle retries."""
        return int(self.get("oracle", "retry_factor", default=DEFAULT_RETRY_FACTOR))

    @property
    def max_precision(self) -> int:
        """Upper bound on retried precision."""
        return int(self.get("oracle", "max_precision", default=DEFAULT_MAX_PRECISION))

    # Zeta settings
    @property
    def zeta_minimum_cutoff(self) -> int:
        """Minimum number of terms summed directly."""
        return int(self.get("zeta", "minimum_cutoff", default=64))

    @property
    def zeta_correction_terms(self) -> int:
        """Bernoulli correction terms in the tail estimate."""
        return int(self.get("zeta", "correction_terms", default=12))

    # Klee settings
    @property
    def klee_precision(self) -> int:
        """Default precision of Klee series reports."""
        if os.environ.get(PRECISION_ENV_VAR) is not None:
            return self.precision
        return int(self.get("klee", "precision", default=DEFAULT_PRECISION))

    # Sweep settings
    @property
    def sweep_jobs(self) -> int:
        """Default worker count for identity sweeps."""
        return max(1, int(self.get("sweep", "jobs", default=1)))

    @property
    def include_timing(self) -> bool:
        """Whether sweep reports carry wall-clock time."""
        return bool(self.get("sweep", "include_timing", default=False))

    @property
    def max_listed_failures(self) -> int:
        """Upper bound on failures written into a report."""
        return int(self.get("sweep", "max_listed_failures", default=1000))

    def grid(self, identity: str) -> dict | None:
        """
        Default grid for an identity.

        :param identity: identity id
        :return: mapping with k_max, n_max, s (and optional filters) or None
        """
        value = self.get("grids", identity)
        if value is None:
            return None
        return dict(value)

    def to_dict(self) -> dict:
        """
        Get full configuration as dictionary.

        :return: Configuration dictionary
        """
        return self._deep_copy(self._config)

    def __repr__(self) -> str:
        return f"CRSumConfig(path={self._config_path})"


def get_config() -> CRSumConfig:
    """
    Get the global configuration.

    :return: CRSumConfig instance
    """
    return CRSumConfig.get_instance()


def configure(config_path: str | Path | None = None) -> CRSumConfig:
    """
    Configure the global settings from a file.

    :param config_path: Path to YAML config file
    :return: CRSumConfig instance
    """
    return CRSumConfig.configure(config_path)


def get_default_config_path() -> Path | None:
    """
    Get the packaged defaults file path.

    :return: Path to defaults.yaml or None if not found
    """
    package_dir = Path(__file__).parent.parent
    default_path = package_dir / "config" / DEFAULT_CONFIG_FILE

    if default_path.exists():
        return default_path

    return None
