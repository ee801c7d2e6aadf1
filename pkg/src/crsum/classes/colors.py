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
Terminal Colors and Styling for CRSum

ANSI color codes for the pretty report format.
"""

from __future__ import annotations

import os
import sys


class Colors:
    """ANSI color codes for terminal output."""

    RED = "\033[31m"
    GREEN = "\033[32m"
    YELLOW = "\033[33m"
    BRIGHT_RED = "\033[91m"
    BRIGHT_GREEN = "\033[92m"
    BRIGHT_YELLOW = "\033[93m"
    BRIGHT_CYAN = "\033[96m"

    BOLD = "\033[1m"
    DIM = "\033[2m"

    RESET = "\033[0m"

    # Class state
    _enabled = True

    @classmethod
    def disable(cls) -> None:
        """Disable color output."""
        cls._enabled = False

    @classmethod
    def enable(cls) -> None:
        """Enable color output."""
        cls._enabled = True

    @classmethod
    def is_enabled(cls) -> bool:
        return cls._enabled

    @classmethod
    def auto_detect(cls) -> None:
        """Turn colors off for NO_COLOR, dumb terminals and non-TTY stdout."""
        if os.environ.get("NO_COLOR"):
            cls._enabled = False
        elif os.environ.get("TERM") == "dumb":
            cls._enabled = False
        elif not sys.stdout.isatty():
            cls._enabled = False
        else:
            cls._enabled = True

    @classmethod
    def colorize(cls, text: str, color: str) -> str:
        """
        Apply color to text.

        :param text: Text to colorize
        :param color: Color code to apply
        :return: Colorized text (or plain text if colors disabled)
        """
        if not cls._enabled:
            return text
        return f"{color}{text}{cls.RESET}"

    @classmethod
    def bold(cls, text: str) -> str:
        return cls.colorize(text, cls.BOLD)

    @classmethod
    def dim(cls, text: str) -> str:
        return cls.colorize(text, cls.DIM)

    @classmethod
    def red(cls, text: str) -> str:
        return cls.colorize(text, cls.BRIGHT_RED)

    @classmethod
    def green(cls, text: str) -> str:
        return cls.colorize(text, cls.BRIGHT_GREEN)

    @classmethod
    def yellow(cls, text: str) -> str:
        return cls.colorize(text, cls.BRIGHT_YELLOW)

    @classmethod
    def cyan(cls, text: str) -> str:
        return cls.colorize(text, cls.BRIGHT_CYAN)

    @classmethod
    def format_status(cls, passed: bool, expected_failures: bool = False) -> str:
        """PASS/FAIL badge; audits that exist to find failures show AUDIT instead."""
        if expected_failures:
            return cls.colorize(f"{Symbols.WARNING} AUDIT", cls.BRIGHT_YELLOW + cls.BOLD)
        if passed:
            return cls.colorize(f"{Symbols.CHECK} PASS", cls.BRIGHT_GREEN + cls.BOLD)
        return cls.colorize(f"{Symbols.CROSS} FAIL", cls.BRIGHT_RED + cls.BOLD)


class Symbols:
    """Unicode symbols for terminal output."""

    CHECK = "✓"
    CROSS = "✗"
    WARNING = "⚠"
    ARROW_RIGHT = "→"
    BULLET = "•"

    BOX_H_LIGHT = "─"
