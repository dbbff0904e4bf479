# -*- coding: utf-8 -*-
"""Structured verification results: per-identity checks, suites, full runs."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Literal, Optional


Status = Literal["pass", "fail", "inconclusive", "skipped"]

REPORT_VERSION = 1


@dataclass(frozen=True)
class Witness:
    """Counterexample or diagnostic attached to a failed or inconclusive check."""

    identity: str
    indices: List[Any] = field(default_factory=list)
    expected: str = ""
    actual: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "identity": self.identity,
            "indices": list(self.indices),
            "expected": self.expected,
            "actual": self.actual,
        }


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    status: Status
    witness: Optional[Witness] = None
    note: str = ""

    @classmethod
    def from_witness(cls, name: str, witness: Optional[Dict[str, Any]]) -> "IdentityCheck":
        if witness is None:
            return cls(name=name, status="pass")
        return cls(
            name=name,
            status="fail",
            witness=Witness(
                identity=str(witness.get("identity") or name),
                indices=list(witness.get("indices") or []),
                expected=str(witness.get("expected", "")),
                actual=str(witness.get("actual", "")),
            ),
        )

    @classmethod
    def passed(cls, name: str, note: str = "") -> "IdentityCheck":
        return cls(name=name, status="pass", note=note)

    @classmethod
    def failed(cls, name: str, *, indices: Iterable[Any] = (), expected: str = "", actual: str = "") -> "IdentityCheck":
        return cls(
            name=name,
            status="fail",
            witness=Witness(identity=name, indices=list(indices), expected=expected, actual=actual),
        )

    @classmethod
    def skipped(cls, name: str, note: str) -> "IdentityCheck":
        return cls(name=name, status="skipped", note=note)

    @classmethod
    def inconclusive(cls, name: str, note: str, *, indices: Iterable[Any] = ()) -> "IdentityCheck":
        return cls(
            name=name,
            status="inconclusive",
            note=note,
            witness=Witness(identity=name, indices=list(indices), expected="", actual=note),
        )


def combine_status(statuses: Iterable[str]) -> Status:
    seen = set(statuses)
    if "fail" in seen:
        return "fail"
    if "inconclusive" in seen:
        return "inconclusive"
    if "pass" in seen:
        return "pass"
    return "skipped"


@dataclass
class SuiteReport:
    """Outcome of one suite: its checks, overall status and timing."""

    name: str
    checks: List[IdentityCheck] = field(default_factory=list)
    wall_time: float = 0.0
    notes: List[str] = field(default_factory=list)

    @classmethod
    def from_checks(cls, name: str, checks: Iterable[IdentityCheck], notes: Iterable[str] = ()) -> "SuiteReport":
        return cls(name=name, checks=list(checks), notes=list(notes))

    @classmethod
    def skipped(cls, name: str, note: str) -> "SuiteReport":
        return cls(name=name, checks=[], notes=[note])

    @property
    def status(self) -> Status:
        return combine_status(check.status for check in self.checks)

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    @property
    def identity_count(self) -> int:
        return sum(1 for check in self.checks if check.status != "skipped")

    @property
    def witnesses(self) -> List[Witness]:
        return [c.witness for c in self.checks if c.witness is not None and c.status != "pass"]

    def check(self, name: str) -> IdentityCheck:
        for item in self.checks:
            if item.name == name:
                return item
        raise KeyError(f"no check named {name!r} in suite {self.name}")

    def extend(self, other: "SuiteReport") -> "SuiteReport":
        return SuiteReport(
            name=self.name,
            checks=self.checks + other.checks,
            wall_time=self.wall_time + other.wall_time,
            notes=self.notes + other.notes,
        )

    def to_dict(self, *, include_timing: bool = True) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "name": self.name,
            "status": self.status,
            "identity_count": self.identity_count,
            "checks": [
                {"name": c.name, "status": c.status, **({"note": c.note} if c.note else {})}
                for c in self.checks
            ],
            "witnesses": [w.to_dict() for w in self.witnesses],
        }
        if self.notes:
            payload["notes"] = list(self.notes)
        if include_timing:
            payload["wall_time"] = round(self.wall_time, 3)
        return payload


@dataclass
class VerificationReport:
    """Whole-run certificate: config echo, suites in execution order, verdict."""

    config: Dict[str, Any]
    suites: List[SuiteReport] = field(default_factory=list)
    version: int = REPORT_VERSION

    @property
    def overall(self) -> Status:
        return combine_status(s.status for s in self.suites)

    def suite(self, name: str) -> SuiteReport:
        for item in self.suites:
            if item.name == name:
                return item
        raise KeyError(f"suite not in report: {name}")

    def to_dict(self, *, include_timing: bool = True) -> Dict[str, Any]:
        return {
            "version": self.version,
            "config": self.config,
            "suites": [s.to_dict(include_timing=include_timing) for s in self.suites],
            "overall": self.overall,
        }

    def to_json(self, *, include_timing: bool = True) -> str:
        return json.dumps(self.to_dict(include_timing=include_timing), ensure_ascii=False, indent=2)

    def stability_hash(self) -> str:
        """SHA-256 of the report with timing fields removed."""
        return hashlib.sha256(self.to_json(include_timing=False).encode("utf-8")).hexdigest()


__all__ = [
    "IdentityCheck",
    "REPORT_VERSION",
    "Status",
    "SuiteReport",
    "VerificationReport",
    "Witness",
    "combine_status",
]
