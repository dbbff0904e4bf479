# -*- coding: utf-8 -*-
"""Logging configuration shared by the ``ospx`` commands."""

from __future__ import annotations

import logging

from rich.console import Console
from rich.logging import RichHandler


ROOT_LOGGER = "osp_rops"


class OutputLevelFilter(logging.Filter):
    """Drop records below the output level selected on the command line."""

    def __init__(self, level: int = logging.WARNING) -> None:
        super().__init__()
        self.level = level

    def filter(self, record: logging.LogRecord) -> bool:
        return record.levelno >= self.level


def _handler(logger: logging.Logger) -> RichHandler:
    for handler in logger.handlers:
        if isinstance(handler, RichHandler):
            return handler
    handler = RichHandler(console=Console(stderr=True), show_path=False, show_time=False)
    handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
    logger.addHandler(handler)
    return handler


def configure_logging(level: int = logging.WARNING, logger_name: str = ROOT_LOGGER) -> logging.Logger:
    """Install the stderr handler and its level filter once; later calls only move the level."""
    logger = logging.getLogger(logger_name)
    logger.setLevel(level)
    logger.propagate = False
    handler = _handler(logger)
    for item in handler.filters:
        if isinstance(item, OutputLevelFilter):
            item.level = level
            return logger
    handler.addFilter(OutputLevelFilter(level))
    return logger


__all__ = ["OutputLevelFilter", "configure_logging"]
