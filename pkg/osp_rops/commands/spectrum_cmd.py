# -*- coding: utf-8 -*-
"""Implementation of ``ospx spectrum``: export of the spectral table of z."""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Any, Dict, List

import yaml

from osp_rops.core.algebra import load_spec_file, preset_spec
from osp_rops.core.errors import ConfigurationError, OracleError, SpecError
from osp_rops.core.fock import build_rep, default_cutoff, spectral_z, spectrum_table
from osp_rops.core.rops import ftt_operator
from osp_rops.core.scalars import I_UNIT, to_scalar
from osp_rops.commands.output_control import emit, log_level
from osp_rops.utils.logging_setup import configure_logging


def _error_result(message: str, *, exit_code: int = 2, error_type: str = "configuration_error") -> int:
    payload = {"ok": False, "action": "spectrum", "error_type": error_type, "message": str(message)}
    print(json.dumps(payload, ensure_ascii=False, indent=2))
    return exit_code


def _samples(raw: str | None) -> List[str]:
    samples = [item.strip() for item in str(raw or "").split(",") if item.strip()]
    for sample in samples:
        to_scalar(sample)
    return samples


def _write_values(rows: List[Dict[str, Any]], path: str) -> Path:
    target = Path(path).expanduser()
    target.parent.mkdir(parents=True, exist_ok=True)
    if target.suffix.lower() == ".csv":
        with target.open("w", encoding="utf-8", newline="") as handle:
            writer = csv.DictWriter(handle, fieldnames=list(rows[0].keys()) if rows else ["lambda", "value"])
            writer.writeheader()
            writer.writerows(rows)
    else:
        target.write_text(json.dumps(rows, ensure_ascii=False, indent=2) + "\n", encoding="utf-8")
    return target


def build_spectrum_payload(args: Any) -> Dict[str, Any]:
    algebra = getattr(args, "algebra_file", None)
    spec = load_spec_file(algebra) if algebra else preset_spec(args.preset, getattr(args, "epsilon", None))
    sigma = -I_UNIT if getattr(args, "sigma", None) == "-i" else I_UNIT
    cutoff = getattr(args, "cutoff", None)
    rep = build_rep(spec, default_cutoff(spec) if cutoff is None else int(cutoff), sigma=sigma)
    decomposition = spectral_z(rep)
    payload: Dict[str, Any] = {
        "ok": True,
        "action": "spectrum",
        "algebra": spec.describe(),
        "cutoff": rep.cutoff,
        "dim": rep.dim,
        "spectrum": spectrum_table(decomposition),
    }
    samples = _samples(getattr(args, "u_samples", None))
    values_out = getattr(args, "values_out", None)
    if samples or values_out:
        rows = ftt_operator(decomposition).dump(samples)
        if values_out:
            payload["values_file"] = str(_write_values(rows, values_out))
        else:
            payload["values"] = rows
    return payload


def run_spectrum(args: Any) -> int:
    configure_logging(log_level(args))
    try:
        payload = build_spectrum_payload(args)
    except (ConfigurationError, SpecError) as exc:
        return _error_result(str(exc))
    except OracleError as exc:
        return _error_result(str(exc), exit_code=3, error_type="oracle_disagreement")

    if getattr(args, "format", "json") == "yaml":
        text = yaml.safe_dump(payload, sort_keys=False, allow_unicode=True)
    else:
        text = json.dumps(payload, ensure_ascii=False, indent=2)
    out = getattr(args, "out", None)
    if out:
        target = Path(out).expanduser()
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
        emit(args, f"spectrum: {len(payload['spectrum'])} eigenspaces written to {target}")
    else:
        print(text)
    return 0


__all__ = ["build_spectrum_payload", "run_spectrum"]
