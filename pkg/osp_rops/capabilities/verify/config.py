# -*- coding: utf-8 -*-
"""Run configuration for ``ospx verify``."""

from __future__ import annotations

from pathlib import Path
from typing import Any, Dict, List, Literal, Optional

import yaml
from pydantic import BaseModel, ConfigDict, Field, field_validator

from osp_rops.core.errors import ConfigurationError
from osp_rops.core.genfun import MAX_ORDER
from osp_rops.core.report import REPORT_VERSION
from osp_rops.core.rops import SW_MAX_K
from osp_rops.core.scalars import I_UNIT, Scalar, to_scalar


class RunConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    preset: Optional[str] = Field(default="osp:1:2", description="Algebra preset: osp:n:2m, so:N or sp:2m.")
    epsilon: Optional[int] = Field(default=None, description="Override of the sign epsilon for osp presets.")
    algebra_file: Optional[str] = Field(default=None, description="YAML algebra file; takes precedence over the preset.")
    sigma: Literal["+i", "-i"] = Field(default="+i", description="Square root of -1 used in z and c+-.")
    cutoff: Optional[int] = Field(
        default=None,
        ge=2,
        le=12,
        description="Joint boson-degree cutoff C; defaults to 8 with one boson mode, else 4.",
    )
    series_order: int = Field(default=12, ge=1, le=MAX_ORDER, description="Order K of the generating-function series.")
    kmax: int = Field(default=8, ge=1, le=SW_MAX_K, description="Largest series coefficient index K_max.")
    invariant_kmax: int = Field(default=8, ge=1, le=8, description="Largest invariant I_k built in the oscillator algebra.")
    fid_order: int = Field(default=6, ge=1, le=MAX_ORDER, description="Truncation order of the telescoped difference equation.")
    suites: List[str] = Field(default_factory=lambda: ["all"], description="Suite names, or 'all'.")
    u_samples: List[str] = Field(default_factory=lambda: ["1/3", "2/5", "-1/7"], description="Exact rational u samples.")
    tol: float = Field(default=1e-6, gt=0, description="Tolerance of the series/Gamma-ratio comparison.")
    gamma_tol: float = Field(default=1e-12, gt=0, description="Tolerance of the Gamma-ratio evaluation.")
    dps: int = Field(default=50, ge=15, le=500, description="mpmath precision in decimal digits.")
    partial: int = Field(default=40, ge=8, le=400, description="Length of the series partial sums.")
    suite_options: Dict[str, Dict[str, Any]] = Field(
        default_factory=dict,
        description="Per-suite input overrides keyed by suite name.",
    )
    out: Optional[str] = Field(default=None, description="Path the JSON report is written to.")
    json_only: bool = Field(default=False, description="Print only the JSON report on stdout.")
    report_version: int = Field(default=REPORT_VERSION, description="Report schema version.")

    @field_validator("epsilon")
    @classmethod
    def _check_epsilon(cls, value: Optional[int]) -> Optional[int]:
        if value not in (None, 1, -1):
            raise ValueError("epsilon must be +1 or -1")
        return value

    @field_validator("suites", mode="before")
    @classmethod
    def _split_suites(cls, value: Any) -> List[str]:
        if isinstance(value, str):
            value = value.split(",")
        names = [str(item).strip() for item in value or [] if str(item).strip()]
        return names or ["all"]

    @field_validator("u_samples", mode="before")
    @classmethod
    def _split_samples(cls, value: Any) -> List[str]:
        if isinstance(value, str):
            value = value.split(",")
        samples = [str(item).strip() for item in value or [] if str(item).strip()]
        for sample in samples:
            try:
                scalar = to_scalar(sample)
            except ConfigurationError as exc:
                raise ValueError(str(exc)) from exc
            if scalar.y:
                raise ValueError(f"u samples must be real: {sample}")
        return samples

    @field_validator("report_version")
    @classmethod
    def _check_version(cls, value: int) -> int:
        if value != REPORT_VERSION:
            raise ValueError(f"only report version {REPORT_VERSION} is supported")
        return value

    @property
    def sigma_value(self) -> Scalar:
        return I_UNIT if self.sigma == "+i" else -I_UNIT

    def echo(self) -> Dict[str, Any]:
        """Config fields that determine the report; output plumbing is left out."""
        return self.model_dump(exclude={"out", "json_only"})

    def suite_input(self, name: str) -> Dict[str, Any]:
        """Input payload for one suite; models ignore the keys they do not declare."""
        payload: Dict[str, Any] = {
            "u_samples": list(self.u_samples),
            "tol": self.tol,
            "gamma_tol": self.gamma_tol,
            "dps": self.dps,
            "partial": self.partial,
        }
        if self.cutoff is not None:
            payload["cutoff"] = self.cutoff
        if name == "genfun":
            payload["order"] = self.series_order
            payload["bridge_kmax"] = self.invariant_kmax
        elif name == "sw":
            payload["kmax"] = self.kmax
            payload["order"] = self.fid_order
        elif name == "invariants":
            payload["kmax"] = self.invariant_kmax
        payload.update(self.suite_options.get(name, {}))
        return payload


def load_run_config(path: str | Path, **overrides: Any) -> RunConfig:
    """Read a YAML run configuration; explicit ``overrides`` win over the file."""
    target = Path(path).expanduser()
    try:
        data = yaml.safe_load(target.read_text(encoding="utf-8")) or {}
    except (OSError, yaml.YAMLError) as exc:
        raise ConfigurationError(f"cannot read run configuration {target}: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigurationError(f"run configuration is not a mapping: {target}")
    data.update({key: value for key, value in overrides.items() if value is not None})
    return RunConfig.model_validate(data)


__all__ = ["RunConfig", "load_run_config"]
