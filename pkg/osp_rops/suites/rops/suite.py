# -*- coding: utf-8 -*-
"""Suite specs for the R-operator group."""

from __future__ import annotations

from osp_rops.core.report import SuiteReport
from osp_rops.core.scalars import OMEGA
from osp_rops.core.suite import SuiteContext, SuiteSpec
from osp_rops.suites._shared import cutoff_for, ftt_for, rep_for

from .input import FTTInput, NumericInput, SWInput
from .logic import gamma_operator, numeric_agreement, series_coefficients, sigma_choice, special_cases


def _sw(ctx: SuiteContext, args: SWInput) -> SuiteReport:
    omega = OMEGA if args.symbolic_omega else ctx.spec.omega
    return series_coefficients(args.kmax, args.order, omega, ctx.sigma)


def _ftt(ctx: SuiteContext, args: FTTInput) -> SuiteReport:
    return gamma_operator(ftt_for(ctx, args.cutoff))


def _special(ctx: SuiteContext, args: FTTInput) -> SuiteReport:
    return special_cases(rep_for(ctx, args.cutoff), ftt_for(ctx, args.cutoff))


def _sigma(ctx: SuiteContext, args: FTTInput) -> SuiteReport:
    return sigma_choice(ctx.spec, cutoff_for(ctx, args.cutoff))


def _numeric(ctx: SuiteContext, args: NumericInput) -> SuiteReport:
    return numeric_agreement(
        ftt_for(ctx, args.cutoff),
        args.u_samples,
        lambdas=args.lambdas,
        tol=args.tol,
        gamma_tol=args.gamma_tol,
        dps=args.dps,
        partial=args.partial,
    )


SW = SuiteSpec(
    name="sw",
    description="Series coefficients: recurrence, closed form, and the telescoped difference equation with a negative control.",
    input_model=SWInput,
    executor=_sw,
    group="rops",
    tags=("rops", "series", "exact"),
    requires=("genfun",),
)

FTT = SuiteSpec(
    name="ftt",
    description="Gamma-ratio operator on the Fock space: invariance, difference equation and the oscillator RLL relation.",
    input_model=FTTInput,
    executor=_ftt,
    group="rops",
    tags=("rops", "fock", "exact"),
    requires=("spectrum",),
)

SPECIAL_CASES = SuiteSpec(
    name="special_cases",
    description="Operator built from the bosonic and fermionic parts of z against the generic chain ratios.",
    input_model=FTTInput,
    executor=_special,
    group="rops",
    tags=("rops", "fock", "exact"),
    requires=("ftt",),
)

SIGMA = SuiteSpec(
    name="sigma",
    description="sigma = +i and sigma = -i give the same operator up to lambda -> -lambda.",
    input_model=FTTInput,
    executor=_sigma,
    group="rops",
    tags=("rops", "fock", "exact"),
    requires=("spectrum",),
)

NUMERIC = SuiteSpec(
    name="numeric",
    description="Chain values against Gamma ratios, and series partial sums against the chain step.",
    input_model=NumericInput,
    executor=_numeric,
    group="rops",
    tags=("rops", "numeric"),
    requires=("ftt", "sw"),
)


__all__ = ["FTT", "NUMERIC", "SIGMA", "SPECIAL_CASES", "SW"]
