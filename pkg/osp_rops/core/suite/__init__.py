# -*- coding: utf-8 -*-
"""Suite contracts and registry."""
from .contracts import SuiteContext, SuiteExecutor, SuiteResult, SuiteSpec, merge_reports
from .registry import SuiteRegistry, build_default_suite_registry, get_suite_spec, list_suite_specs

__all__ = [
    "SuiteContext",
    "SuiteExecutor",
    "SuiteRegistry",
    "SuiteResult",
    "SuiteSpec",
    "build_default_suite_registry",
    "get_suite_spec",
    "list_suite_specs",
    "merge_reports",
]
