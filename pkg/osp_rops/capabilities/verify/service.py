# -*- coding: utf-8 -*-
"""Run orchestration for ``ospx verify``: scheduling, report assembly, exit status."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional

from osp_rops.core.algebra import AlgebraSpec, load_spec_file, preset_spec
from osp_rops.core.errors import ConfigurationError
from osp_rops.core.fock import default_cutoff
from osp_rops.core.report import VerificationReport
from osp_rops.core.suite import (
    SuiteContext,
    SuiteRegistry,
    SuiteResult,
    SuiteSpec,
    build_default_suite_registry,
)

from .config import RunConfig


logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_CONFIG = 2
EXIT_ORACLE = 3


@dataclass
class VerifyOutcome:
    report: VerificationReport
    results: Dict[str, SuiteResult] = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        error_types = {result.error_type for result in self.results.values()}
        if "oracle_disagreement" in error_types:
            return EXIT_ORACLE
        if "configuration_error" in error_types:
            return EXIT_CONFIG
        return EXIT_FAIL if self.report.overall == "fail" else EXIT_PASS

    @property
    def inconclusive(self) -> List[str]:
        return [suite.name for suite in self.report.suites if suite.status == "inconclusive"]


def resolve_spec(config: RunConfig) -> AlgebraSpec:
    if config.algebra_file:
        return load_spec_file(config.algebra_file)
    if not config.preset:
        raise ConfigurationError("either a preset or an algebra file is required")
    return preset_spec(config.preset, config.epsilon)


def select_suites(registry: SuiteRegistry, names: List[str]) -> List[SuiteSpec]:
    if any(name == "all" for name in names):
        return registry.list()
    unknown = [name for name in names if name not in registry.names()]
    if unknown:
        raise ConfigurationError(
            f"unknown suite(s): {', '.join(unknown)}; available: {', '.join(registry.names())}"
        )
    wanted = set(names)
    return [spec for spec in registry.list() if spec.name in wanted]


def schedule(registry: SuiteRegistry, selected: List[SuiteSpec]) -> List[SuiteSpec]:
    """Selected suites in an order honoring ``requires``, also through unselected suites."""
    chosen = {spec.name for spec in selected}
    state: Dict[str, str] = {}
    order: List[SuiteSpec] = []

    def visit(spec: SuiteSpec) -> None:
        mark = state.get(spec.name)
        if mark == "done":
            return
        if mark == "active":
            raise ConfigurationError(f"suite prerequisites form a cycle at {spec.name}")
        state[spec.name] = "active"
        for name in spec.requires:
            visit(registry.get(name))
        state[spec.name] = "done"
        if spec.name in chosen:
            order.append(spec)

    for spec in selected:
        visit(spec)
    return order


class VerifyService:
    """Resolves a run configuration and executes its suites."""

    def __init__(self, registry: Optional[SuiteRegistry] = None) -> None:
        self.registry = registry or build_default_suite_registry()

    def plan(self, config: RunConfig) -> List[SuiteSpec]:
        return schedule(self.registry, select_suites(self.registry, config.suites))

    def run(self, config: RunConfig) -> VerifyOutcome:
        spec = resolve_spec(config)
        if config.cutoff is None:
            config = config.model_copy(update={"cutoff": default_cutoff(spec)})
        suites = self.plan(config)
        ctx = SuiteContext(spec=spec, sigma=config.sigma_value)
        report = VerificationReport(config={**config.echo(), "algebra": spec.describe()})
        outcome = VerifyOutcome(report=report)
        for suite in suites:
            logger.info("suite %s: start on %s", suite.name, spec.name)
            result = suite.execute(ctx, config.suite_input(suite.name))
            report.suites.append(result.report)
            outcome.results[suite.name] = result
            logger.info(
                "suite %s: %s, %d identities, %.2fs",
                suite.name,
                result.report.status,
                result.report.identity_count,
                result.report.wall_time,
            )
            if result.error_type:
                logger.warning("suite %s: %s", suite.name, result.summary)
        for name in outcome.inconclusive:
            logger.warning("suite %s is inconclusive", name)
        return outcome

    def write(self, outcome: VerifyOutcome, path: str | Path) -> Path:
        target = Path(path).expanduser()
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(outcome.report.to_json() + "\n", encoding="utf-8")
        return target


__all__ = [
    "EXIT_CONFIG",
    "EXIT_FAIL",
    "EXIT_ORACLE",
    "EXIT_PASS",
    "VerifyOutcome",
    "VerifyService",
    "resolve_spec",
    "schedule",
    "select_suites",
]
