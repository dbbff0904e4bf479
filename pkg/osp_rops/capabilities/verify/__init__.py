# -*- coding: utf-8 -*-
"""Verify capability."""

from .config import RunConfig, load_run_config
from .service import VerifyOutcome, VerifyService

__all__ = ["RunConfig", "VerifyOutcome", "VerifyService", "load_run_config"]
