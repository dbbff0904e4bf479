# -*- coding: utf-8 -*-
"""Suite specs for the oscillator group."""

from __future__ import annotations

from osp_rops.core.report import SuiteReport
from osp_rops.core.suite import SuiteContext, SuiteSpec
from osp_rops.suites._shared import oscillator_for

from .input import InvariantsInput, OscInput
from .logic import f_generators, invariants, rll_osc, z_relations


def _f_generators(ctx: SuiteContext, args: OscInput) -> SuiteReport:
    return f_generators(oscillator_for(ctx, args.oracle_max))


def _rll_osc(ctx: SuiteContext, args: OscInput) -> SuiteReport:
    return rll_osc(oscillator_for(ctx, args.oracle_max))


def _invariants(ctx: SuiteContext, args: InvariantsInput) -> SuiteReport:
    return invariants(oscillator_for(ctx, args.oracle_max), kmax=args.kmax)


def _z_relations(ctx: SuiteContext, args: OscInput) -> SuiteReport:
    return z_relations(oscillator_for(ctx, args.oracle_max))


F_GENERATORS = SuiteSpec(
    name="osc",
    description="Metric contractions and the F generators: supertrace, antisymmetry, osp closure, characteristic identity, Casimir.",
    input_model=OscInput,
    executor=_f_generators,
    group="osc",
    tags=("oscillator", "exact"),
)

RLL_OSC = SuiteSpec(
    name="rll_osc",
    description="RLL relation between the defining R-matrix and two oscillator L-operators, symbolic in u and v.",
    input_model=OscInput,
    executor=_rll_osc,
    group="osc",
    tags=("oscillator", "exact", "ybe"),
    requires=("osc",),
)

INVARIANTS = SuiteSpec(
    name="invariants",
    description="Invariants I_k: invariance, recurrence, reduction to z, symmetrizer and hermiticity.",
    input_model=InvariantsInput,
    executor=_invariants,
    group="osc",
    tags=("oscillator", "exact"),
    requires=("osc",),
)

Z_RELATIONS = SuiteSpec(
    name="z_relations",
    description="Commutation of z with the generators and the scalar projections of the two sandwiches.",
    input_model=OscInput,
    executor=_z_relations,
    group="osc",
    tags=("oscillator", "exact"),
    requires=("osc",),
)


__all__ = ["F_GENERATORS", "INVARIANTS", "RLL_OSC", "Z_RELATIONS"]
