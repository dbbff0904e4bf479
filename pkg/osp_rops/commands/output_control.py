# -*- coding: utf-8 -*-
"""Output levels shared by the ospx commands.

``--quiet`` prints summary lines, ``--verbose`` adds the rich summary table,
witnesses and INFO logs, ``--debug`` adds per-identity DEBUG logs.
"""

from __future__ import annotations

import logging
from typing import Any

_RANK = {"quiet": 0, "verbose": 1, "debug": 2}
_LOG_LEVELS = {"quiet": logging.WARNING, "verbose": logging.INFO, "debug": logging.DEBUG}


def output_level(args: Any) -> str:
    level = str(getattr(args, "output_level", "quiet") or "quiet").strip().lower()
    return level if level in _RANK else "quiet"


def log_level(args: Any) -> int:
    return _LOG_LEVELS[output_level(args)]


def enabled(args: Any, level: str) -> bool:
    return _RANK[output_level(args)] >= _RANK.get(str(level or "quiet").strip().lower(), 0)


def emit(args: Any, message: str, *, level: str = "quiet") -> None:
    if enabled(args, level):
        print(message)


__all__ = ["emit", "enabled", "log_level", "output_level"]
