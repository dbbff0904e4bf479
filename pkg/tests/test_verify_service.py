# -*- coding: utf-8 -*-

import pytest
from pydantic import BaseModel, ValidationError

from osp_rops.capabilities.verify import RunConfig, VerifyService, load_run_config
from osp_rops.capabilities.verify.service import resolve_spec, schedule, select_suites
from osp_rops.core.errors import ConfigurationError, OracleError
from osp_rops.core.report import IdentityCheck, SuiteReport
from osp_rops.core.suite import SuiteRegistry, SuiteSpec, build_default_suite_registry


class _Input(BaseModel):
    cutoff: int = 2


def _returning(*checks):
    def executor(ctx, args):
        return SuiteReport.from_checks("ignored", list(checks))

    return executor


def _raising(exc):
    def executor(ctx, args):
        raise exc

    return executor


def _registry(*specs):
    registry = SuiteRegistry()
    for name, executor, requires in specs:
        registry.register(
            SuiteSpec(name=name, description=name, input_model=_Input, executor=executor, requires=requires)
        )
    return registry


def test_schedule_puts_prerequisites_first():
    registry = _registry(
        ("late", _returning(IdentityCheck.passed("x")), ("early",)),
        ("early", _returning(IdentityCheck.passed("x")), ()),
    )
    order = schedule(registry, select_suites(registry, ["late", "early"]))
    assert [spec.name for spec in order] == ["early", "late"]


def test_schedule_orders_through_unselected_prerequisites():
    registry = build_default_suite_registry()
    order = schedule(registry, select_suites(registry, ["numeric", "pk"]))
    assert [spec.name for spec in order] == ["pk", "numeric"]


def test_schedule_rejects_cycles():
    registry = _registry(
        ("a", _returning(), ("b",)),
        ("b", _returning(), ("a",)),
    )
    with pytest.raises(ConfigurationError):
        schedule(registry, registry.list())


def test_select_unknown_suite():
    with pytest.raises(ConfigurationError, match="unknown suite"):
        select_suites(build_default_suite_registry(), ["pk", "nope"])


def test_select_all():
    registry = build_default_suite_registry()
    assert select_suites(registry, ["all"]) == registry.list()


def test_run_config_defaults_and_splitting():
    config = RunConfig.model_validate({"suites": "pk, brauer", "u_samples": "1/3,-2/7"})
    assert config.suites == ["pk", "brauer"]
    assert config.u_samples == ["1/3", "-2/7"]
    assert config.preset == "osp:1:2"
    assert RunConfig(suites=[]).suites == ["all"]


@pytest.mark.parametrize(
    "payload",
    [
        {"epsilon": 2},
        {"u_samples": ["1+I"]},
        {"u_samples": ["not a number"]},
        {"report_version": 2},
        {"cutoff": 1},
        {"kmax": 40},
        {"sigma": "i"},
        {"unknown_key": 1},
    ],
)
def test_run_config_rejects(payload):
    with pytest.raises(ValidationError):
        RunConfig.model_validate(payload)


def test_suite_input_mapping():
    config = RunConfig(
        series_order=10,
        kmax=12,
        fid_order=5,
        invariant_kmax=4,
        suite_options={"sw": {"symbolic_omega": False}},
    )
    assert config.suite_input("genfun")["order"] == 10
    assert config.suite_input("genfun")["bridge_kmax"] == 4
    sw = config.suite_input("sw")
    assert (sw["kmax"], sw["order"], sw["symbolic_omega"]) == (12, 5, False)
    assert config.suite_input("invariants")["kmax"] == 4
    assert "cutoff" not in config.suite_input("ftt")
    assert RunConfig(cutoff=5).suite_input("ftt")["cutoff"] == 5


def test_invariant_defaults_reach_kmax_eight():
    config = RunConfig()
    assert config.cutoff is None
    assert config.invariant_kmax == 8
    assert config.suite_input("invariants")["kmax"] == 8
    assert config.suite_input("genfun")["bridge_kmax"] == 8
    with pytest.raises(ValidationError):
        RunConfig(invariant_kmax=9)


def test_echo_leaves_out_output_plumbing():
    echo = RunConfig(out="report.json", json_only=True).echo()
    assert "out" not in echo
    assert "json_only" not in echo
    assert echo["preset"] == "osp:1:2"


def test_load_run_config_with_overrides(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text("preset: osp:2:2\ncutoff: 3\nsuites: [pk]\n", encoding="utf-8")
    config = load_run_config(path, cutoff=5, sigma=None)
    assert config.preset == "osp:2:2"
    assert config.cutoff == 5
    assert config.sigma == "+i"


def test_load_run_config_errors(tmp_path):
    with pytest.raises(ConfigurationError):
        load_run_config(tmp_path / "missing.yaml")
    listing = tmp_path / "list.yaml"
    listing.write_text("- pk\n", encoding="utf-8")
    with pytest.raises(ConfigurationError):
        load_run_config(listing)


def test_resolve_spec_prefers_algebra_file(tmp_path):
    path = tmp_path / "alg.yaml"
    path.write_text("preset: sp:2\n", encoding="utf-8")
    assert resolve_spec(RunConfig(preset="osp:2:2", algebra_file=str(path))).name == "sp(2)"
    with pytest.raises(ConfigurationError):
        resolve_spec(RunConfig(preset=None))


@pytest.mark.parametrize(
    "executor, expected",
    [
        (_returning(IdentityCheck.passed("x")), 0),
        (_returning(IdentityCheck.failed("x", expected="0", actual="1")), 1),
        (_raising(ConfigurationError("bad cutoff")), 2),
        (_raising(OracleError("closed form differs")), 3),
    ],
)
def test_exit_codes(executor, expected):
    service = VerifyService(_registry(("only", executor, ())))
    outcome = service.run(RunConfig(suites=["only"]))
    assert outcome.exit_code == expected
    assert [suite.name for suite in outcome.report.suites] == ["only"]


def test_oracle_outranks_configuration_errors():
    service = VerifyService(
        _registry(
            ("config", _raising(ConfigurationError("bad")), ()),
            ("oracle", _raising(OracleError("differs")), ()),
        )
    )
    assert service.run(RunConfig(suites=["all"])).exit_code == 3


def test_inconclusive_suites_are_listed():
    service = VerifyService(
        _registry(("numeric", _returning(IdentityCheck.inconclusive("sum", "not settled")), ()))
    )
    outcome = service.run(RunConfig(suites=["numeric"]))
    assert outcome.inconclusive == ["numeric"]
    assert outcome.exit_code == 0


def test_report_echoes_config_and_algebra(tmp_path):
    service = VerifyService(_registry(("only", _returning(IdentityCheck.passed("x")), ())))
    outcome = service.run(RunConfig(preset="osp:2:2", suites=["only"]))
    config = outcome.report.config
    assert config["algebra"]["name"] == "osp(2|2)"
    assert config["suites"] == ["only"]
    target = service.write(outcome, tmp_path / "nested" / "report.json")
    assert target.read_text(encoding="utf-8").endswith("\n")


@pytest.mark.parametrize(
    "overrides, expected",
    [
        ({"preset": "osp:1:2"}, 8),
        ({"preset": "osp:2:2"}, 8),
        ({"preset": "osp:2:4"}, 4),
        ({"preset": "so:3"}, 4),
        ({"preset": "osp:1:2", "cutoff": 3}, 3),
    ],
)
def test_cutoff_default_follows_boson_modes(overrides, expected):
    seen = []

    def executor(ctx, args):
        seen.append(args.cutoff)
        return SuiteReport.from_checks("ignored", [IdentityCheck.passed("x")])

    service = VerifyService(_registry(("only", executor, ())))
    outcome = service.run(RunConfig(suites=["only"], **overrides))
    assert seen == [expected]
    assert outcome.report.config["cutoff"] == expected
