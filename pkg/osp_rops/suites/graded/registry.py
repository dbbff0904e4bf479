# -*- coding: utf-8 -*-
"""Registry for graded suite specs."""

from __future__ import annotations

from typing import List

from osp_rops.core.suite import SuiteSpec

from .suite import OSP_DEFREP, PK_IDENTITIES

SUITE_SPECS: List[SuiteSpec] = [PK_IDENTITIES, OSP_DEFREP]

__all__ = ["OSP_DEFREP", "PK_IDENTITIES", "SUITE_SPECS"]
