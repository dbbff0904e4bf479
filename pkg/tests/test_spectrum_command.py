# -*- coding: utf-8 -*-

import csv
import json

import yaml

from osp_rops.cli import main


def test_spectrum_json(capsys):
    code = main(["spectrum", "--preset", "osp:1:2", "--cutoff", "3"])
    payload = json.loads(capsys.readouterr().out)
    assert code == 0
    assert payload["action"] == "spectrum"
    assert payload["cutoff"] == 3
    rows = payload["spectrum"]
    assert set(rows[0]) == {"lambda", "multiplicity", "degree_block"}
    assert sum(row["multiplicity"] for row in rows) == payload["dim"]
    assert "values" not in payload


def test_spectrum_yaml(capsys):
    code = main(["spectrum", "--cutoff", "2", "--format", "yaml"])
    payload = yaml.safe_load(capsys.readouterr().out)
    assert code == 0
    assert payload["algebra"]["name"] == "osp(1|2)"


def test_spectrum_with_u_samples(capsys):
    code = main(["spectrum", "--cutoff", "3", "--u-samples", "1/3,2/5"])
    payload = json.loads(capsys.readouterr().out)
    assert code == 0
    lambdas = {row["lambda"] for row in payload["spectrum"]}
    assert {row["lambda"] for row in payload["values"]} == lambdas
    assert {"u=1/3", "u=2/5"} <= set(payload["values"][0])


def test_spectrum_values_csv(tmp_path, capsys):
    target = tmp_path / "values.csv"
    code = main(["spectrum", "--cutoff", "3", "--u-samples", "1/3", "--values-out", str(target)])
    payload = json.loads(capsys.readouterr().out)
    assert code == 0
    assert payload["values_file"] == str(target)
    with target.open(encoding="utf-8", newline="") as handle:
        rows = list(csv.DictReader(handle))
    assert rows[0]["value"] == "1"
    assert set(rows[0]) == {"lambda", "value", "u=1/3"}


def test_spectrum_out_file(tmp_path, capsys):
    target = tmp_path / "spectrum.json"
    code = main(["spectrum", "--cutoff", "2", "--out", str(target)])
    out = capsys.readouterr().out
    assert code == 0
    assert "eigenspaces written to" in out
    assert json.loads(target.read_text(encoding="utf-8"))["ok"] is True


def test_spectrum_configuration_errors(capsys):
    assert main(["spectrum", "--cutoff", "1"]) == 2
    payload = json.loads(capsys.readouterr().out)
    assert payload["error_type"] == "configuration_error"
    assert main(["spectrum", "--preset", "so:3", "--cutoff", "2"]) == 2
    capsys.readouterr()
