# -*- coding: utf-8 -*-
"""Generic ``ospx suite`` command handlers."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict

from pydantic import ValidationError

from osp_rops.core.algebra import load_spec_file, preset_spec
from osp_rops.core.errors import ConfigurationError, SpecError
from osp_rops.core.scalars import I_UNIT
from osp_rops.core.suite import SuiteContext, SuiteSpec, get_suite_spec, list_suite_specs
from osp_rops.commands.output_control import log_level
from osp_rops.utils.logging_setup import configure_logging


def _suite_metadata(spec: SuiteSpec) -> Dict[str, Any]:
    return {
        "name": spec.name,
        "description": spec.description,
        "group": spec.group,
        "tags": list(spec.tags),
        "requires": list(spec.requires),
        "input_model": spec.input_model.__name__,
    }


def _success_payload(*, action: str, **data: Any) -> Dict[str, Any]:
    payload = {"ok": True, "action": action}
    payload.update(data)
    return payload


def _error_payload(
    *,
    action: str,
    message: str,
    error_type: str,
    suite_name: str | None = None,
    **data: Any,
) -> Dict[str, Any]:
    payload = {
        "ok": False,
        "action": action,
        "error_type": error_type,
        "message": str(message),
    }
    if suite_name:
        payload["suite_name"] = suite_name
    payload.update(data)
    return payload


def _emit_json(payload: Dict[str, Any]) -> None:
    print(json.dumps(payload, ensure_ascii=False, indent=2))


def _load_input_payload(args: Any) -> Dict[str, Any]:
    raw_json = getattr(args, "input_json", None)
    input_file = getattr(args, "input_file", None)
    if raw_json is not None:
        source = str(raw_json)
    elif input_file is not None:
        source = Path(str(input_file)).expanduser().read_text(encoding="utf-8")
    else:
        return {}

    try:
        payload = json.loads(source)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON input: {exc}") from exc

    if not isinstance(payload, dict):
        raise ValueError("suite input must decode to a JSON object")
    return payload


def _build_suite_context(args: Any) -> SuiteContext:
    algebra = getattr(args, "algebra_file", None)
    if algebra:
        spec = load_spec_file(algebra)
    else:
        spec = preset_spec(getattr(args, "preset", None) or "osp:1:2", getattr(args, "epsilon", None))
    sigma = -I_UNIT if getattr(args, "sigma", None) == "-i" else I_UNIT
    return SuiteContext(spec=spec, sigma=sigma)


def _execute_list(args: Any) -> tuple[Dict[str, Any], int]:
    tags = list(getattr(args, "tag", []) or [])
    specs = list_suite_specs(tags=tags)
    payload = _success_payload(
        action="suite_list",
        count=len(specs),
        filter_tags=tags,
        suites=[_suite_metadata(spec) for spec in specs],
    )
    return payload, 0


def _execute_schema(args: Any) -> tuple[Dict[str, Any], int]:
    suite_name = str(getattr(args, "suite_name", "") or "").strip()
    try:
        spec = get_suite_spec(suite_name)
    except KeyError:
        return (
            _error_payload(
                action="suite_schema",
                message=f"unknown suite: {suite_name}",
                error_type="suite_not_found",
                suite_name=suite_name,
            ),
            2,
        )

    payload = _success_payload(
        action="suite_schema",
        suite=_suite_metadata(spec),
        input_schema=spec.input_model.model_json_schema(),
    )
    return payload, 0


def _execute_run(args: Any) -> tuple[Dict[str, Any], int]:
    suite_name = str(getattr(args, "suite_name", "") or "").strip()
    try:
        spec = get_suite_spec(suite_name)
    except KeyError:
        return (
            _error_payload(
                action="suite_run",
                message=f"unknown suite: {suite_name}",
                error_type="suite_not_found",
                suite_name=suite_name,
            ),
            2,
        )

    try:
        raw_input = _load_input_payload(args)
    except (OSError, ValueError) as exc:
        return (
            _error_payload(action=spec.name, message=str(exc), error_type="invalid_input", suite_name=spec.name),
            2,
        )

    try:
        ctx = _build_suite_context(args)
    except (ConfigurationError, SpecError) as exc:
        return (
            _error_payload(action=spec.name, message=str(exc), error_type="configuration_error", suite_name=spec.name),
            2,
        )

    try:
        result = spec.execute(ctx, raw_input)
    except ValidationError as exc:
        return (
            _error_payload(
                action=spec.name,
                message="suite input validation failed",
                error_type="input_validation_failed",
                suite_name=spec.name,
                validation_errors=exc.errors(include_url=False),
            ),
            2,
        )

    payload = result.to_payload(action=spec.name)
    payload.setdefault("suite_name", spec.name)
    payload.setdefault("algebra", ctx.spec.describe())
    if result.error_type == "oracle_disagreement":
        code = 3
    elif result.error_type == "configuration_error":
        code = 2
    else:
        code = 0 if result.ok else 1
    return payload, code


def run_suite(args: Any) -> int:
    configure_logging(log_level(args))
    action = str(getattr(args, "suite_action", "") or "").strip()
    if action == "list":
        payload, code = _execute_list(args)
    elif action == "schema":
        payload, code = _execute_schema(args)
    elif action == "run":
        payload, code = _execute_run(args)
    else:
        payload = _error_payload(
            action="suite",
            message=f"unsupported suite action: {action}",
            error_type="unsupported_action",
        )
        code = 2

    _emit_json(payload)
    return int(code)


__all__ = ["run_suite"]
