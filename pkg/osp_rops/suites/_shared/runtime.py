# -*- coding: utf-8 -*-
"""Memoized builders for objects several suites of one run share."""

from __future__ import annotations

from typing import Optional

from osp_rops.core.fock import FockRep, SpectralDecomposition, build_rep, default_cutoff, spectral_z
from osp_rops.core.osc import OscAlgebra
from osp_rops.core.rops import FTTOperator, ftt_operator
from osp_rops.core.suite import SuiteContext


def cutoff_for(ctx: SuiteContext, cutoff: Optional[int]) -> int:
    return default_cutoff(ctx.spec) if cutoff is None else cutoff


def oscillator_for(ctx: SuiteContext, oracle_max: int = 6) -> OscAlgebra:
    return ctx.memo(("osc", oracle_max), lambda: OscAlgebra(ctx.spec, ctx.sigma, oracle_max=oracle_max))


def rep_for(ctx: SuiteContext, cutoff: Optional[int]) -> FockRep:
    cutoff = cutoff_for(ctx, cutoff)
    return ctx.memo(("rep", cutoff), lambda: build_rep(ctx.spec, cutoff, sigma=ctx.sigma))


def z_spectrum_for(ctx: SuiteContext, cutoff: Optional[int]) -> SpectralDecomposition:
    cutoff = cutoff_for(ctx, cutoff)
    return ctx.memo(("spectrum", cutoff), lambda: spectral_z(rep_for(ctx, cutoff)))


def ftt_for(ctx: SuiteContext, cutoff: Optional[int]) -> FTTOperator:
    cutoff = cutoff_for(ctx, cutoff)
    return ctx.memo(("ftt", cutoff), lambda: ftt_operator(z_spectrum_for(ctx, cutoff)))


__all__ = ["cutoff_for", "ftt_for", "oscillator_for", "rep_for", "z_spectrum_for"]
