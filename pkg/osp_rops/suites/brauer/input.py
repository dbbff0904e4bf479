# -*- coding: utf-8 -*-
"""Input models for the Brauer suites."""

from __future__ import annotations

from pydantic import Field

from osp_rops.suites._shared import GenericInput


class BrauerInput(GenericInput):
    factors: int = Field(default=3, ge=2, le=4, description="Number of tensor factors n of B_n(omega).")


class YBEInput(GenericInput):
    include_rll: bool = Field(default=True, description="Also check the defining-representation RLL relation.")
