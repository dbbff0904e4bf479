# -*- coding: utf-8 -*-
"""Discovery-based catalog of the built-in verification suites."""

from __future__ import annotations

from importlib import import_module
from pathlib import Path
import pkgutil
from typing import List, Tuple

from osp_rops.core.suite.contracts import SuiteSpec


_SUITES_PACKAGE = "osp_rops.suites"
_SUITES_DIR = Path(__file__).resolve().parents[2] / "suites"
_SKIP_PACKAGES = {"__pycache__"}

# Discovery is alphabetical; this fixes the order suites are listed and run in.
GROUP_ORDER = ("graded", "brauer", "osc", "genfun", "fock", "rops")


def iter_suite_group_names() -> List[str]:
    groups: List[str] = []
    for module_info in pkgutil.iter_modules([str(_SUITES_DIR)]):
        if not module_info.ispkg:
            continue
        name = str(module_info.name).strip()
        if not name or name in _SKIP_PACKAGES:
            continue
        if (_SUITES_DIR / name / "registry.py").exists():
            groups.append(name)
    rank = {name: i for i, name in enumerate(GROUP_ORDER)}
    return sorted(groups, key=lambda name: (rank.get(name, len(rank)), name))


def load_suite_specs_for_group(group_name: str) -> List[SuiteSpec]:
    registry_py = _SUITES_DIR / group_name / "registry.py"
    if not registry_py.exists():
        raise FileNotFoundError(f"no registry.py for suite group: {group_name}")

    module = import_module(f"{_SUITES_PACKAGE}.{group_name}.registry")
    specs = getattr(module, "SUITE_SPECS", None)
    if specs is None:
        raise AttributeError(f"{module.__name__} does not define SUITE_SPECS")
    if not isinstance(specs, (list, tuple)):
        raise TypeError(f"{module.__name__}.SUITE_SPECS must be a list or tuple")
    return [spec for spec in specs if isinstance(spec, SuiteSpec)]


def load_all_suite_specs() -> List[SuiteSpec]:
    all_specs: List[SuiteSpec] = []
    for group_name in iter_suite_group_names():
        all_specs.extend(load_suite_specs_for_group(group_name))
    return all_specs


ALL_SUITE_GROUPS: Tuple[str, ...] = tuple(iter_suite_group_names())
ALL_SUITE_SPECS: List[SuiteSpec] = load_all_suite_specs()


__all__ = [
    "ALL_SUITE_GROUPS",
    "ALL_SUITE_SPECS",
    "GROUP_ORDER",
    "iter_suite_group_names",
    "load_all_suite_specs",
    "load_suite_specs_for_group",
]
