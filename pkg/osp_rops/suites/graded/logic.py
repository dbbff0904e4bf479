# -*- coding: utf-8 -*-
"""Pure logic for the graded suites."""

from __future__ import annotations

from osp_rops.core.algebra import AlgebraSpec
from osp_rops.core.graded import verify_osp_defrep, verify_pk_identities
from osp_rops.core.report import SuiteReport


def pk_identities(spec: AlgebraSpec, *, factors: int = 3) -> SuiteReport:
    return verify_pk_identities(spec, factors)


def osp_defrep(spec: AlgebraSpec) -> SuiteReport:
    return verify_osp_defrep(spec)
