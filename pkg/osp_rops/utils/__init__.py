# -*- coding: utf-8 -*-
"""Shared utility helpers for the CLI."""

from .logging_setup import configure_logging

__all__ = ["configure_logging"]
