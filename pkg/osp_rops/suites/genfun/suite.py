# -*- coding: utf-8 -*-
"""Suite spec for the generating function."""

from __future__ import annotations

from osp_rops.core.report import SuiteReport
from osp_rops.core.scalars import OMEGA
from osp_rops.core.suite import SuiteContext, SuiteSpec
from osp_rops.suites._shared import oscillator_for

from .input import GenfunInput
from .logic import generating_function


def _genfun(ctx: SuiteContext, args: GenfunInput) -> SuiteReport:
    omega = OMEGA if args.symbolic_omega else ctx.spec.omega
    return generating_function(args.order, omega, alg=oscillator_for(ctx), bridge_kmax=args.bridge_kmax)


GENFUN = SuiteSpec(
    name="genfun",
    description="ODE, shift identities and invariant coefficients of the generating function F(x|z).",
    input_model=GenfunInput,
    executor=_genfun,
    group="genfun",
    tags=("series", "exact"),
)


__all__ = ["GENFUN"]
