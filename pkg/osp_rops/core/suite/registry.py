# -*- coding: utf-8 -*-
"""Registry of verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Sequence

from .contracts import SuiteSpec


@dataclass
class SuiteRegistry:
    """Container of suite definitions, in registration order."""

    _suites: Dict[str, SuiteSpec] = field(default_factory=dict)

    def register(self, spec: SuiteSpec) -> None:
        if spec.name in self._suites:
            raise ValueError(f"suite already registered: {spec.name}")
        self._suites[spec.name] = spec

    def get(self, name: str) -> SuiteSpec:
        spec = self._suites.get(str(name).strip())
        if spec is None:
            raise KeyError(f"suite not found: {name}")
        return spec

    def list(self, *, tags: Sequence[str] | None = None) -> List[SuiteSpec]:
        specs = list(self._suites.values())
        if not tags:
            return specs
        expected = {str(tag).strip() for tag in tags if str(tag).strip()}
        if not expected:
            return specs
        return [spec for spec in specs if expected.intersection(spec.tags + (spec.group,))]

    def names(self) -> List[str]:
        return list(self._suites.keys())


@lru_cache(maxsize=1)
def build_default_suite_registry() -> SuiteRegistry:
    from osp_rops.core.suite.catalog import ALL_SUITE_SPECS

    registry = SuiteRegistry()
    for spec in ALL_SUITE_SPECS:
        registry.register(spec)
    for spec in registry.list():
        for name in spec.requires:
            registry.get(name)
    return registry


def get_suite_spec(name: str) -> SuiteSpec:
    return build_default_suite_registry().get(name)


def list_suite_specs(*, tags: Sequence[str] | None = None) -> List[SuiteSpec]:
    return build_default_suite_registry().list(tags=tags)


__all__ = [
    "SuiteRegistry",
    "build_default_suite_registry",
    "get_suite_spec",
    "list_suite_specs",
]
