# -*- coding: utf-8 -*-
"""Exact verification of osp-invariant R-matrices and R-operators."""

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("osp-rops")
except PackageNotFoundError:
    __version__ = "0+unknown"

__all__ = ["__version__"]
