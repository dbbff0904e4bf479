# -*- coding: utf-8 -*-
"""Input models for the oscillator suites."""

from __future__ import annotations

from pydantic import Field

from osp_rops.suites._shared import GenericInput


class OscInput(GenericInput):
    oracle_max: int = Field(
        default=6,
        ge=2,
        le=8,
        description="Longest word checked against the brute-force permutation-sum symmetrizer.",
    )


class InvariantsInput(OscInput):
    kmax: int = Field(default=8, ge=1, le=8, description="Largest invariant index k.")
