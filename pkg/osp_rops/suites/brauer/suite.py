# -*- coding: utf-8 -*-
"""Suite specs for the Brauer group."""

from __future__ import annotations

from osp_rops.core.report import SuiteReport
from osp_rops.core.suite import SuiteContext, SuiteSpec
from osp_rops.suites._shared import GenericInput

from .input import BrauerInput, YBEInput
from .logic import brauer_relations, unitarity, yang_baxter


def _brauer(ctx: SuiteContext, args: BrauerInput) -> SuiteReport:
    return brauer_relations(ctx.spec, factors=args.factors)


def _unitarity(ctx: SuiteContext, _args: GenericInput) -> SuiteReport:
    return unitarity(ctx.spec)


def _ybe(ctx: SuiteContext, args: YBEInput) -> SuiteReport:
    return yang_baxter(ctx.spec, include_rll=args.include_rll)


BRAUER = SuiteSpec(
    name="brauer",
    description="Defining relations of B_n(omega) represented by eps*P and K.",
    input_model=BrauerInput,
    executor=_brauer,
    group="brauer",
    tags=("defrep", "exact"),
)

UNITARITY = SuiteSpec(
    name="unitarity",
    description="rho(u) rho(-u) = (u^2 - 1)(u^2 - beta^2) as a polynomial identity.",
    input_model=GenericInput,
    executor=_unitarity,
    group="brauer",
    tags=("defrep", "exact"),
    requires=("brauer",),
)

YBE = SuiteSpec(
    name="ybe",
    description="Braided and graded Yang-Baxter equations, the twisted solution and the R-matrix structure.",
    input_model=YBEInput,
    executor=_ybe,
    group="brauer",
    tags=("defrep", "exact", "ybe"),
)


__all__ = ["BRAUER", "UNITARITY", "YBE"]
