# -*- coding: utf-8 -*-
"""Registry for oscillator suite specs."""

from __future__ import annotations

from typing import List

from osp_rops.core.suite import SuiteSpec

from .suite import F_GENERATORS, INVARIANTS, RLL_OSC, Z_RELATIONS

SUITE_SPECS: List[SuiteSpec] = [F_GENERATORS, RLL_OSC, INVARIANTS, Z_RELATIONS]

__all__ = ["F_GENERATORS", "INVARIANTS", "RLL_OSC", "SUITE_SPECS", "Z_RELATIONS"]
