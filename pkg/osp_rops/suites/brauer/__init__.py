# -*- coding: utf-8 -*-
"""Brauer-algebra suites: relations, unitarity and Yang-Baxter equations."""

from .registry import BRAUER, SUITE_SPECS, UNITARITY, YBE

__all__ = ["BRAUER", "SUITE_SPECS", "UNITARITY", "YBE"]
