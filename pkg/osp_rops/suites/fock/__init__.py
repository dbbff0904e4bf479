# -*- coding: utf-8 -*-
"""Truncated Fock representation suites."""

from .registry import FOCK, SPECTRUM, SUITE_SPECS

__all__ = ["FOCK", "SPECTRUM", "SUITE_SPECS"]
