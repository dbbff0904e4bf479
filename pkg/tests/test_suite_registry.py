# -*- coding: utf-8 -*-

import pytest
from pydantic import BaseModel, ValidationError

from osp_rops.core.algebra import preset_spec
from osp_rops.core.errors import ConfigurationError, OracleError, SpecError
from osp_rops.core.report import IdentityCheck, SuiteReport
from osp_rops.core.suite import (
    SuiteContext,
    SuiteRegistry,
    SuiteSpec,
    build_default_suite_registry,
    get_suite_spec,
    list_suite_specs,
)
from osp_rops.core.suite.catalog import ALL_SUITE_GROUPS, GROUP_ORDER


class _Input(BaseModel):
    depth: int = 1


def _spec(name, executor, **kwargs):
    return SuiteSpec(name=name, description=f"{name} suite", input_model=_Input, executor=executor, **kwargs)


def _passing(ctx, args):
    return SuiteReport.from_checks("anything", [IdentityCheck.passed("x=x", note=f"depth {args.depth}")])


def _raising(exc):
    def executor(ctx, args):
        raise exc

    return executor


@pytest.fixture
def ctx():
    return SuiteContext(spec=preset_spec("osp:1:2"))


def test_catalog_discovers_groups_in_order():
    assert ALL_SUITE_GROUPS == GROUP_ORDER
    assert "_shared" not in ALL_SUITE_GROUPS


def test_default_registry_lists_every_suite():
    names = build_default_suite_registry().names()
    assert names[:2] == ["pk", "osp_defrep"]
    for name in ("brauer", "ybe", "osc", "genfun", "fock", "spectrum", "sw", "ftt", "numeric"):
        assert name in names
    assert get_suite_spec("numeric").requires == ("ftt", "sw")


def test_list_filters_by_tag_or_group():
    numeric = {spec.name for spec in list_suite_specs(tags=["numeric"])}
    assert "numeric" in numeric
    rops = {spec.name for spec in list_suite_specs(tags=["rops"])}
    assert {"sw", "ftt", "special_cases", "sigma", "numeric"} <= rops
    assert len(list_suite_specs(tags=[" "])) == len(list_suite_specs())


def test_registry_rejects_duplicates_and_unknown_names():
    registry = SuiteRegistry()
    registry.register(_spec("one", _passing))
    with pytest.raises(ValueError):
        registry.register(_spec("one", _passing))
    with pytest.raises(KeyError):
        registry.get("two")
    assert registry.get(" one ").name == "one"


def test_execute_renames_report_and_times_it(ctx):
    result = _spec("renamed", _passing).execute(ctx, {"depth": 3})
    assert result.ok is True
    assert result.report.name == "renamed"
    assert result.report.checks[0].note == "depth 3"
    assert result.report.wall_time >= 0
    assert result.summary == "renamed: pass"


@pytest.mark.parametrize(
    "exc, error_type",
    [
        (OracleError("closed form differs"), "oracle_disagreement"),
        (ConfigurationError("cutoff too small"), "configuration_error"),
        (RuntimeError("boom"), "suite_exception"),
    ],
)
def test_execute_maps_exceptions(ctx, exc, error_type):
    result = _spec("broken", _raising(exc)).execute(ctx)
    assert result.ok is False
    assert result.error_type == error_type
    assert result.report.status == "fail"
    assert result.report.checks[0].name == error_type


def test_spec_error_skips_the_suite(ctx):
    result = _spec("fock", _raising(SpecError("no standard layout"))).execute(ctx)
    assert result.ok is True
    assert result.report.status == "skipped"
    assert result.report.notes == ["no standard layout"]


def test_invalid_input_propagates(ctx):
    with pytest.raises(ValidationError):
        _spec("typed", _passing).execute(ctx, {"depth": "deep"})


def test_payload_carries_report_and_error(ctx):
    payload = _spec("broken", _raising(OracleError("mismatch"))).execute(ctx).to_payload(action="suite_run")
    assert payload["ok"] is False
    assert payload["action"] == "suite_run"
    assert payload["error_type"] == "oracle_disagreement"
    assert payload["error_message"] == "mismatch"
    assert payload["report"]["name"] == "broken"


def test_context_memo_builds_once():
    context = SuiteContext(spec=preset_spec("osp:1:2"))
    calls = []

    def factory():
        calls.append(1)
        return len(calls)

    assert context.memo("key", factory) == 1
    assert context.memo("key", factory) == 1
    assert calls == [1]
