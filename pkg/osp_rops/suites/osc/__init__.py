# -*- coding: utf-8 -*-
"""Super-oscillator suites."""

from .registry import F_GENERATORS, INVARIANTS, RLL_OSC, SUITE_SPECS, Z_RELATIONS

__all__ = ["F_GENERATORS", "INVARIANTS", "RLL_OSC", "SUITE_SPECS", "Z_RELATIONS"]
