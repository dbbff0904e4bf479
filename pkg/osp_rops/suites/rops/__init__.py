# -*- coding: utf-8 -*-
"""R-operator suites: series coefficients, the Gamma-ratio operator and their agreement."""

from .registry import FTT, NUMERIC, SIGMA, SPECIAL_CASES, SUITE_SPECS, SW

__all__ = ["FTT", "NUMERIC", "SIGMA", "SPECIAL_CASES", "SUITE_SPECS", "SW"]
