# -*- coding: utf-8 -*-
"""Registry for Brauer suite specs."""

from __future__ import annotations

from typing import List

from osp_rops.core.suite import SuiteSpec

from .suite import BRAUER, UNITARITY, YBE

SUITE_SPECS: List[SuiteSpec] = [BRAUER, UNITARITY, YBE]

__all__ = ["BRAUER", "SUITE_SPECS", "UNITARITY", "YBE"]
