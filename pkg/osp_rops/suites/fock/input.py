# -*- coding: utf-8 -*-
"""Input models for the Fock suites."""

from __future__ import annotations

from osp_rops.suites._shared import CutoffInput


class FockInput(CutoffInput):
    pass
