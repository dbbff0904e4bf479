# -*- coding: utf-8 -*-
"""Input models reused by several suites."""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field


class GenericInput(BaseModel):
    model_config = ConfigDict(extra="ignore")


class CutoffInput(GenericInput):
    cutoff: Optional[int] = Field(
        default=None,
        ge=2,
        le=12,
        description="Joint boson-degree cutoff C of the Fock representation; defaults to 8 with one boson mode, else 4.",
    )
