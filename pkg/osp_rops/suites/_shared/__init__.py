# -*- coding: utf-8 -*-
"""Shared helpers for verification suites."""

from .inputs import CutoffInput, GenericInput
from .runtime import cutoff_for, ftt_for, oscillator_for, rep_for, z_spectrum_for

__all__ = [
    "CutoffInput",
    "GenericInput",
    "cutoff_for",
    "ftt_for",
    "oscillator_for",
    "rep_for",
    "z_spectrum_for",
]
