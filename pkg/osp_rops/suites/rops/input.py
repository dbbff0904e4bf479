# -*- coding: utf-8 -*-
"""Input models for the R-operator suites."""

from __future__ import annotations

from typing import List, Optional

from pydantic import Field

from osp_rops.core.genfun import MAX_ORDER
from osp_rops.core.rops import SW_MAX_K
from osp_rops.suites._shared import CutoffInput, GenericInput


class SWInput(GenericInput):
    kmax: int = Field(default=8, ge=1, le=SW_MAX_K, description="Largest series coefficient index K_max.")
    order: int = Field(default=6, ge=1, le=MAX_ORDER, description="Truncation order K of the telescoped sum.")
    symbolic_omega: bool = Field(default=True, description="Keep omega as a symbol in the coefficients.")


class FTTInput(CutoffInput):
    pass


class NumericInput(CutoffInput):
    u_samples: List[str] = Field(
        default_factory=lambda: ["1/3", "2/5", "-1/7"],
        description="Exact rational spectral parameters, e.g. '1/3'.",
    )
    lambdas: Optional[List[str]] = Field(
        default=None,
        description="z-eigenvalues for the series check; defaults to the truncated spectrum.",
    )
    tol: float = Field(default=1e-6, gt=0, description="Relative tolerance of the series/Gamma-ratio comparison.")
    gamma_tol: float = Field(default=1e-12, gt=0, description="Relative tolerance of the Gamma-ratio evaluation.")
    dps: int = Field(default=50, ge=15, le=500, description="mpmath working precision in decimal digits.")
    partial: int = Field(default=40, ge=8, le=400, description="Number of series terms in each partial sum.")
