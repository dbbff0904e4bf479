# -*- coding: utf-8 -*-
"""Input models for the graded suites."""

from __future__ import annotations

from pydantic import Field

from osp_rops.suites._shared import GenericInput


class PKInput(GenericInput):
    factors: int = Field(default=3, ge=2, le=4, description="Number of tensor factors the operator words act on.")


class DefrepInput(GenericInput):
    pass
