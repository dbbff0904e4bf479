# -*- coding: utf-8 -*-
"""Suite specs for the Fock group."""

from __future__ import annotations

from osp_rops.core.report import SuiteReport
from osp_rops.core.suite import SuiteContext, SuiteSpec
from osp_rops.suites._shared import rep_for, z_spectrum_for

from .input import FockInput
from .logic import representation, spectrum


def _fock(ctx: SuiteContext, args: FockInput) -> SuiteReport:
    return representation(rep_for(ctx, args.cutoff))


def _spectrum(ctx: SuiteContext, args: FockInput) -> SuiteReport:
    return spectrum(z_spectrum_for(ctx, args.cutoff))


FOCK = SuiteSpec(
    name="fock",
    description="Oscillator relations, z relations and fermionic projectors as matrices on the truncated Fock space.",
    input_model=FockInput,
    executor=_fock,
    group="fock",
    tags=("fock", "exact"),
    requires=("osc",),
)

SPECTRUM = SuiteSpec(
    name="spectrum",
    description="Exact spectral decomposition of z: idempotent, orthogonal and complete projectors.",
    input_model=FockInput,
    executor=_spectrum,
    group="fock",
    tags=("fock", "exact", "spectrum"),
    requires=("fock",),
)


__all__ = ["FOCK", "SPECTRUM"]
