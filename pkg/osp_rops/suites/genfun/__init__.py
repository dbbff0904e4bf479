# -*- coding: utf-8 -*-
"""Generating-function suite."""

from .registry import GENFUN, SUITE_SPECS

__all__ = ["GENFUN", "SUITE_SPECS"]
