# -*- coding: utf-8 -*-
"""Runtime contracts shared by every verification suite."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Hashable, Iterable, Optional, Tuple, Type

from pydantic import BaseModel, ValidationError

from osp_rops.core.algebra import AlgebraSpec
from osp_rops.core.errors import ConfigurationError, OracleError, SpecError, TruncationError
from osp_rops.core.report import IdentityCheck, SuiteReport
from osp_rops.core.scalars import I_UNIT, Scalar


@dataclass(frozen=True)
class SuiteContext:
    """Algebra and shared state handed to each suite executor.

    ``cache`` holds deterministic intermediate objects (representations,
    spectral decompositions) so that suites of one run do not rebuild them.
    """

    spec: AlgebraSpec
    sigma: Scalar = I_UNIT
    cache: Dict[Hashable, Any] = field(default_factory=dict, compare=False)

    def memo(self, key: Hashable, factory: Callable[[], Any]) -> Any:
        if key not in self.cache:
            self.cache[key] = factory()
        return self.cache[key]


@dataclass
class SuiteResult:
    """Normalized suite outcome; ``report`` is always present."""

    ok: bool
    report: SuiteReport
    summary: str = ""
    error_type: str = ""
    error_message: str = ""
    data: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def success(cls, report: SuiteReport, *, summary: str = "", data: Optional[Dict[str, Any]] = None) -> "SuiteResult":
        return cls(
            ok=report.ok,
            report=report,
            summary=summary or f"{report.name}: {report.status}",
            data=dict(data or {}),
        )

    @classmethod
    def failure(cls, name: str, *, summary: str, error_type: str, error_message: str = "") -> "SuiteResult":
        check = IdentityCheck.failed(error_type, expected="no exception", actual=error_message or summary)
        return cls(
            ok=False,
            report=SuiteReport.from_checks(name, [check]),
            summary=summary,
            error_type=str(error_type or "suite_failed"),
            error_message=str(error_message or "").strip(),
        )

    def to_payload(self, *, action: str | None = None) -> Dict[str, Any]:
        payload = dict(self.data)
        payload.setdefault("ok", bool(self.ok))
        if action and "action" not in payload:
            payload["action"] = action
        if self.summary and "message" not in payload:
            payload["message"] = self.summary
        if self.error_type and "error_type" not in payload:
            payload["error_type"] = self.error_type
        if self.error_message and "error_message" not in payload:
            payload["error_message"] = self.error_message
        payload.setdefault("report", self.report.to_dict())
        return payload


SuiteExecutor = Callable[[SuiteContext, BaseModel], SuiteReport]


@dataclass(frozen=True)
class SuiteSpec:
    """Definition of one verification suite.

    ``requires`` only orders the run; a suite's verdict never depends on
    whether its prerequisites were selected.
    """

    name: str
    description: str
    input_model: Type[BaseModel]
    executor: SuiteExecutor
    group: str = ""
    tags: Tuple[str, ...] = ()
    requires: Tuple[str, ...] = ()

    def execute(self, ctx: SuiteContext, raw_input: BaseModel | Dict[str, Any] | None = None) -> SuiteResult:
        if isinstance(raw_input, self.input_model):
            parsed = raw_input
        else:
            parsed = self.input_model.model_validate(dict(raw_input or {}))
        started = time.perf_counter()
        try:
            report = self.executor(ctx, parsed)
        except ValidationError:
            raise
        except SpecError as exc:
            report = SuiteReport.skipped(self.name, str(exc))
            result = SuiteResult.success(report, summary=f"{self.name}: skipped ({exc})")
        except OracleError as exc:
            result = SuiteResult.failure(
                self.name,
                summary=f"suite '{self.name}': independent constructions disagree: {exc}",
                error_type="oracle_disagreement",
                error_message=str(exc),
            )
        except (ConfigurationError, TruncationError) as exc:
            result = SuiteResult.failure(
                self.name,
                summary=f"suite '{self.name}' is misconfigured: {exc}",
                error_type="configuration_error",
                error_message=str(exc),
            )
        except Exception as exc:
            result = SuiteResult.failure(
                self.name,
                summary=f"suite '{self.name}' raised an unexpected exception: {exc}",
                error_type="suite_exception",
                error_message=str(exc),
            )
        else:
            report.name = self.name
            result = SuiteResult.success(report)
        result.report.wall_time = time.perf_counter() - started
        return result


def merge_reports(name: str, reports: Iterable[SuiteReport]) -> SuiteReport:
    merged = SuiteReport(name=name)
    for report in reports:
        merged = merged.extend(report)
    return merged


__all__ = [
    "SuiteContext",
    "SuiteExecutor",
    "SuiteResult",
    "SuiteSpec",
    "merge_reports",
]
