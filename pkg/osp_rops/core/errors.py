# -*- coding: utf-8 -*-
"""Exception hierarchy shared by the algebra kernel and the run driver."""

from __future__ import annotations


class OspError(Exception):
    """Base class for every error raised by osp_rops."""


class SpecError(OspError):
    """Invalid algebra specification or an unsupported realization."""


class ConfigurationError(OspError):
    """Incompatible operands or run options (symbol tables, orders, flags)."""


class DomainError(OspError, ZeroDivisionError):
    """Arithmetic outside the domain of an operation, e.g. a zero denominator."""


class TruncationError(OspError):
    """A Fock-space computation needs more boson degree than the cutoff holds."""


class OracleError(OspError):
    """Two independent constructions of the same object disagree."""


__all__ = [
    "ConfigurationError",
    "DomainError",
    "OracleError",
    "OspError",
    "SpecError",
    "TruncationError",
]
