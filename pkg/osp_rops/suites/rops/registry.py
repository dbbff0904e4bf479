# -*- coding: utf-8 -*-
"""Registry for R-operator suite specs."""

from __future__ import annotations

from typing import List

from osp_rops.core.suite import SuiteSpec

from .suite import FTT, NUMERIC, SIGMA, SPECIAL_CASES, SW

SUITE_SPECS: List[SuiteSpec] = [SW, FTT, SPECIAL_CASES, SIGMA, NUMERIC]

__all__ = ["FTT", "NUMERIC", "SIGMA", "SPECIAL_CASES", "SUITE_SPECS", "SW"]
