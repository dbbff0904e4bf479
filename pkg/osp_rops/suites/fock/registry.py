# -*- coding: utf-8 -*-
"""Registry for Fock suite specs."""

from __future__ import annotations

from typing import List

from osp_rops.core.suite import SuiteSpec

from .suite import FOCK, SPECTRUM

SUITE_SPECS: List[SuiteSpec] = [FOCK, SPECTRUM]

__all__ = ["FOCK", "SPECTRUM", "SUITE_SPECS"]
