# -*- coding: utf-8 -*-
"""Pure logic for the Brauer suites."""

from __future__ import annotations

from osp_rops.core.algebra import AlgebraSpec
from osp_rops.core.brauer import (
    BrauerRep,
    verify_brauer_relations,
    verify_rll_defrep,
    verify_unitarity,
    verify_ybe_suite,
)
from osp_rops.core.report import SuiteReport


def brauer_relations(spec: AlgebraSpec, *, factors: int = 3) -> SuiteReport:
    return verify_brauer_relations(BrauerRep.build(spec, factors))


def unitarity(spec: AlgebraSpec) -> SuiteReport:
    return verify_unitarity(BrauerRep.build(spec, 3))


def yang_baxter(spec: AlgebraSpec, *, include_rll: bool = True) -> SuiteReport:
    report = verify_ybe_suite(spec)
    if include_rll:
        report.checks.append(verify_rll_defrep(spec))
    return report
