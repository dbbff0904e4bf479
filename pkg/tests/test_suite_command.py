# -*- coding: utf-8 -*-

import json

from osp_rops.cli import main
from osp_rops.core.suite import list_suite_specs


def test_suite_list(capsys):
    code = main(["suite", "list"])
    payload = json.loads(capsys.readouterr().out)
    assert code == 0
    assert payload["action"] == "suite_list"
    assert payload["count"] == len(list_suite_specs())
    first = payload["suites"][0]
    assert set(first) == {"name", "description", "group", "tags", "requires", "input_model"}


def test_suite_list_filters_tags(capsys):
    code = main(["suite", "list", "--tag", "brauer"])
    payload = json.loads(capsys.readouterr().out)
    assert code == 0
    assert payload["filter_tags"] == ["brauer"]
    assert {suite["group"] for suite in payload["suites"]} == {"brauer"}


def test_suite_schema(capsys):
    code = main(["suite", "schema", "numeric"])
    payload = json.loads(capsys.readouterr().out)
    assert code == 0
    assert payload["suite"]["requires"] == ["ftt", "sw"]
    properties = payload["input_schema"]["properties"]
    assert {"cutoff", "u_samples", "dps", "partial"} <= set(properties)


def test_suite_schema_unknown(capsys):
    code = main(["suite", "schema", "missing"])
    payload = json.loads(capsys.readouterr().out)
    assert code == 2
    assert payload["error_type"] == "suite_not_found"
    assert payload["suite_name"] == "missing"


def test_suite_run_pk(capsys):
    code = main(["suite", "run", "pk", "--preset", "osp:2:2", "--input-json", '{"factors": 3}'])
    payload = json.loads(capsys.readouterr().out)
    assert code == 0
    assert payload["ok"] is True
    assert payload["suite_name"] == "pk"
    assert payload["algebra"]["name"] == "osp(2|2)"
    assert payload["report"]["status"] == "pass"


def test_suite_run_input_file(tmp_path, capsys):
    source = tmp_path / "input.json"
    source.write_text('{"order": 6}', encoding="utf-8")
    code = main(["suite", "run", "genfun", "--input-file", str(source)])
    payload = json.loads(capsys.readouterr().out)
    assert code == 0
    assert payload["report"]["name"] == "genfun"


def test_suite_run_validation_error(capsys):
    code = main(["suite", "run", "fock", "--input-json", '{"cutoff": 1}'])
    payload = json.loads(capsys.readouterr().out)
    assert code == 2
    assert payload["error_type"] == "input_validation_failed"
    assert payload["validation_errors"][0]["loc"] == ["cutoff"]


def test_suite_run_rejects_non_object_input(capsys):
    code = main(["suite", "run", "pk", "--input-json", "[1, 2]"])
    payload = json.loads(capsys.readouterr().out)
    assert code == 2
    assert payload["error_type"] == "invalid_input"


def test_suite_run_bad_preset(capsys):
    code = main(["suite", "run", "pk", "--preset", "osp:1:3"])
    payload = json.loads(capsys.readouterr().out)
    assert code == 2
    assert payload["error_type"] == "configuration_error"


def test_suite_run_custom_algebra_is_skipped(tmp_path, capsys):
    algebra = tmp_path / "line.yaml"
    algebra.write_text("epsilon: 1\ngrading: '0'\nmetric: ['1/2']\n", encoding="utf-8")
    code = main(["suite", "run", "spectrum", "--algebra", str(algebra)])
    payload = json.loads(capsys.readouterr().out)
    assert code == 0
    assert payload["report"]["status"] == "skipped"
