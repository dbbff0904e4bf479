# -*- coding: utf-8 -*-
"""Capability layer for CLI-facing use cases."""

from .verify import RunConfig, VerifyService

__all__ = ["RunConfig", "VerifyService"]
