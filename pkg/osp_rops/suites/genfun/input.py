# -*- coding: utf-8 -*-
"""Input models for the generating-function suite."""

from __future__ import annotations

from pydantic import Field

from osp_rops.core.genfun import MAX_ORDER
from osp_rops.suites._shared import GenericInput


class GenfunInput(GenericInput):
    order: int = Field(default=12, ge=1, le=MAX_ORDER, description="Series order K in x.")
    symbolic_omega: bool = Field(
        default=True,
        description="Keep omega as a symbol; otherwise substitute the algebra's value.",
    )
    bridge_kmax: int = Field(
        default=8,
        ge=0,
        le=8,
        description="Largest k whose oscillator invariant is reduced to z and compared with the series.",
    )
