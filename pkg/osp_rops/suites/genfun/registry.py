# -*- coding: utf-8 -*-
"""Registry for generating-function suite specs."""

from __future__ import annotations

from typing import List

from osp_rops.core.suite import SuiteSpec

from .suite import GENFUN

SUITE_SPECS: List[SuiteSpec] = [GENFUN]

__all__ = ["GENFUN", "SUITE_SPECS"]
