# -*- coding: utf-8 -*-
"""Suite specs for the graded group."""

from __future__ import annotations

from osp_rops.core.report import SuiteReport
from osp_rops.core.suite import SuiteContext, SuiteSpec

from .input import DefrepInput, PKInput
from .logic import osp_defrep, pk_identities


def _pk(ctx: SuiteContext, args: PKInput) -> SuiteReport:
    return pk_identities(ctx.spec, factors=args.factors)


def _defrep(ctx: SuiteContext, _args: DefrepInput) -> SuiteReport:
    return osp_defrep(ctx.spec)


PK_IDENTITIES = SuiteSpec(
    name="pk",
    description="Superpermutation, K-operator and sign-operator word identities on V^(x)n.",
    input_model=PKInput,
    executor=_pk,
    group="graded",
    tags=("defrep", "exact"),
)

OSP_DEFREP = SuiteSpec(
    name="osp_defrep",
    description="osp relations, supertraces and closure of the defining-representation generators.",
    input_model=DefrepInput,
    executor=_defrep,
    group="graded",
    tags=("defrep", "exact"),
    requires=("pk",),
)


__all__ = ["OSP_DEFREP", "PK_IDENTITIES"]
