# -*- coding: utf-8 -*-
"""Command handlers for the ``ospx`` CLI."""

from .spectrum_cmd import run_spectrum
from .suite_cmd import run_suite
from .verify_cmd import run_verify

__all__ = ["run_spectrum", "run_suite", "run_verify"]
