# -*- coding: utf-8 -*-

import json

import pytest

from osp_rops.cli import main


def test_verify_json_only_reports_selected_suites(capsys):
    code = main(["verify", "--preset", "osp:2:2", "--suite", "brauer,ybe", "--json-only"])
    payload = json.loads(capsys.readouterr().out)
    assert code == 0
    assert payload["version"] == 1
    assert [suite["name"] for suite in payload["suites"]] == ["brauer", "ybe"]
    assert payload["overall"] == "pass"
    assert payload["config"]["algebra"]["name"] == "osp(2|2)"
    assert payload["config"]["algebra"]["omega"] == 0


def test_verify_quiet_summary(capsys):
    code = main(["verify", "--suite", "pk"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.splitlines()[0].startswith("pk: pass (")
    assert "overall: pass" in out


def test_verify_verbose_prints_table(capsys):
    code = main(["verify", "--verbose", "--preset", "sp:2", "--suite", "pk"])
    out = capsys.readouterr().out
    assert code == 0
    assert "identities" in out
    assert "overall: pass" in out


def test_verify_writes_report(tmp_path, capsys):
    target = tmp_path / "out" / "report.json"
    code = main(["verify", "--preset", "so:3", "--suite", "brauer", "--out", str(target)])
    out = capsys.readouterr().out
    assert code == 0
    assert f"report: {target}" in out
    report = json.loads(target.read_text(encoding="utf-8"))
    assert report["suites"][0]["name"] == "brauer"
    assert "out" not in report["config"]


def test_verify_reads_config_file_and_flags_win(tmp_path, capsys):
    config = tmp_path / "run.yaml"
    config.write_text("preset: osp:1:2\nsuites: [brauer]\ncutoff: 3\n", encoding="utf-8")
    code = main(["verify", "--config", str(config), "--suite", "pk", "--json-only"])
    payload = json.loads(capsys.readouterr().out)
    assert code == 0
    assert [suite["name"] for suite in payload["suites"]] == ["pk"]
    assert payload["config"]["cutoff"] == 3


def test_verify_invariant_kmax_flag_and_default_cutoff(capsys):
    code = main(["verify", "--preset", "osp:2:2", "--suite", "pk", "--invariant-kmax", "3", "--json-only"])
    payload = json.loads(capsys.readouterr().out)
    assert code == 0
    assert payload["config"]["invariant_kmax"] == 3
    assert payload["config"]["cutoff"] == 8


def test_verify_rejects_invariant_kmax_above_eight(capsys):
    assert main(["verify", "--suite", "pk", "--invariant-kmax", "9"]) == 2


def test_verify_rejects_malformed_algebra_file(tmp_path, capsys):
    algebra = tmp_path / "bad.yaml"
    algebra.write_text("epsilon: -1\ngrading: '00'\nmetric: [1, 0, 0, 1]\n", encoding="utf-8")
    report = tmp_path / "report.json"
    code = main(["verify", "--algebra", str(algebra), "--suite", "pk", "--out", str(report)])
    payload = json.loads(capsys.readouterr().out)
    assert code == 2
    assert payload["ok"] is False
    assert payload["stage"] == "algebra"
    assert not report.exists()


def test_verify_rejects_invalid_flags(capsys):
    code = main(["verify", "--cutoff", "1", "--suite", "fock"])
    payload = json.loads(capsys.readouterr().out)
    assert code == 2
    assert payload["error_type"] == "configuration_error"
    assert payload["stage"] == "config"


def test_verify_rejects_unknown_suite(capsys):
    code = main(["verify", "--suite", "pk,nonexistent"])
    payload = json.loads(capsys.readouterr().out)
    assert code == 2
    assert "nonexistent" in payload["message"]


def test_verify_custom_algebra_skips_fock_suites(tmp_path, capsys):
    algebra = tmp_path / "line.yaml"
    algebra.write_text("epsilon: 1\ngrading: '0'\nmetric: ['1/2']\n", encoding="utf-8")
    code = main(["verify", "--algebra", str(algebra), "--suite", "fock", "--json-only"])
    payload = json.loads(capsys.readouterr().out)
    assert code == 0
    assert payload["suites"][0]["status"] == "skipped"
    assert payload["overall"] == "skipped"


@pytest.mark.slow
def test_verify_all_suites_osp12(capsys):
    code = main(["verify", "--preset", "osp:1:2", "--suite", "all", "--cutoff", "3", "--json-only"])
    payload = json.loads(capsys.readouterr().out)
    assert code == 0
    assert payload["overall"] in ("pass", "inconclusive")
    names = [suite["name"] for suite in payload["suites"]]
    assert names.index("genfun") < names.index("sw")
    assert names.index("ftt") < names.index("numeric")
