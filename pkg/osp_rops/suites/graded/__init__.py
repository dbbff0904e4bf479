# -*- coding: utf-8 -*-
"""Graded tensor-operator suites: P/K word identities and the osp defining representation."""

from .registry import OSP_DEFREP, PK_IDENTITIES, SUITE_SPECS

__all__ = ["OSP_DEFREP", "PK_IDENTITIES", "SUITE_SPECS"]
