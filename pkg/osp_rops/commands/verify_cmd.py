# -*- coding: utf-8 -*-
"""Implementation of ``ospx verify``."""

from __future__ import annotations

import json
import logging
from typing import Any, Dict, Optional

from pydantic import ValidationError
from rich.console import Console
from rich.table import Table

from osp_rops.capabilities.verify import RunConfig, VerifyOutcome, VerifyService, load_run_config
from osp_rops.commands.output_control import emit, enabled, log_level
from osp_rops.core.errors import ConfigurationError, SpecError
from osp_rops.utils.logging_setup import configure_logging


logger = logging.getLogger(__name__)

_FLAG_FIELDS = (
    "preset",
    "epsilon",
    "algebra_file",
    "sigma",
    "cutoff",
    "series_order",
    "kmax",
    "invariant_kmax",
    "suites",
    "u_samples",
    "tol",
    "gamma_tol",
    "dps",
    "partial",
    "out",
)


def _error_result(message: str, *, exit_code: int = 2, error_type: str = "configuration_error", stage: str = "config") -> int:
    payload = {"ok": False, "error_type": error_type, "message": str(message), "stage": stage}
    print(json.dumps(payload, ensure_ascii=False, indent=2))
    return exit_code


def _overrides(args: Any) -> Dict[str, Any]:
    data = {name: getattr(args, name, None) for name in _FLAG_FIELDS}
    if getattr(args, "json_only", False):
        data["json_only"] = True
    return {key: value for key, value in data.items() if value is not None}


def build_run_config(args: Any) -> RunConfig:
    overrides = _overrides(args)
    config_path: Optional[str] = getattr(args, "config", None)
    if config_path:
        return load_run_config(config_path, **overrides)
    return RunConfig.model_validate(overrides)


def _summary_table(outcome: VerifyOutcome) -> Table:
    table = Table(title=f"ospx verify: {outcome.report.config.get('algebra', {}).get('name', '')}")
    table.add_column("suite")
    table.add_column("status")
    table.add_column("identities", justify="right")
    table.add_column("time [s]", justify="right")
    for suite in outcome.report.suites:
        table.add_row(suite.name, suite.status, str(suite.identity_count), f"{suite.wall_time:.2f}")
    return table


def _print_summary(args: Any, outcome: VerifyOutcome, written: Optional[str]) -> None:
    report = outcome.report
    if enabled(args, "verbose"):
        Console().print(_summary_table(outcome))
        for suite in report.suites:
            for witness in suite.witnesses:
                emit(args, f"  {suite.name}: {witness.identity} at {witness.indices}: "
                     f"expected {witness.expected}, got {witness.actual}", level="verbose")
    else:
        for suite in report.suites:
            emit(args, f"{suite.name}: {suite.status} ({suite.identity_count} identities)")
    for name in outcome.inconclusive:
        emit(args, f"note: suite {name} is inconclusive")
    emit(args, f"overall: {report.overall}")
    if written:
        emit(args, f"report: {written}")


def execute_verify(args: Any) -> int:
    configure_logging(log_level(args))
    try:
        config = build_run_config(args)
    except ValidationError as exc:
        return _error_result(f"invalid run configuration: {exc.errors(include_url=False)}")
    except ConfigurationError as exc:
        return _error_result(str(exc))

    service = VerifyService()
    try:
        outcome = service.run(config)
    except (ConfigurationError, SpecError) as exc:
        return _error_result(str(exc), stage="algebra")

    written = None
    if config.out:
        written = str(service.write(outcome, config.out))
    if config.json_only:
        print(outcome.report.to_json())
    else:
        _print_summary(args, outcome, written)
    logger.info("verify finished with exit code %d", outcome.exit_code)
    return outcome.exit_code


def run_verify(args: Any) -> int:
    return execute_verify(args)


__all__ = ["build_run_config", "execute_verify", "run_verify"]
