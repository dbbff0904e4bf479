# -*- coding: utf-8 -*-

from fractions import Fraction
from pathlib import Path

import pytest

from osp_rops.core.algebra import (
    SHIPPED_PRESETS,
    load_spec_file,
    preset_spec,
    shipped_specs,
    spec_from_mapping,
)
from osp_rops.core.errors import ConfigurationError, SpecError
from osp_rops.core.scalars import gaussian


def test_osp12_preset_has_expected_invariants():
    spec = preset_spec("osp:1:2")
    assert spec.name == "osp(1|2)"
    assert spec.dim == 3
    assert spec.grading == (0, 0, 1)
    assert spec.epsilon == -1
    assert spec.omega == -1
    assert spec.beta == gaussian(Fraction(3, 2))
    assert spec.validated


def test_epsilon_plus_swaps_parities():
    spec = preset_spec("osp:1:2", epsilon=1)
    assert spec.grading == (1, 1, 0)
    assert spec.omega == -1


def test_so_and_sp_presets():
    so3 = preset_spec("so:3")
    assert so3.epsilon == 1
    assert so3.omega == 3
    assert so3.layout.m == 0
    sp2 = preset_spec("sp:2")
    assert sp2.omega == -2
    assert sp2.layout.n == 0


def test_osp22_has_vanishing_omega():
    spec = preset_spec("osp:2:2")
    assert spec.omega == 0
    assert spec.beta == gaussian(1)


@pytest.mark.parametrize("preset", ["gl:3", "osp:1", "osp:1:3", "sp:0"])
def test_bad_presets_are_configuration_errors(preset):
    with pytest.raises(ConfigurationError):
        preset_spec(preset)


def test_bad_epsilon_is_configuration_error():
    with pytest.raises(ConfigurationError):
        preset_spec("osp:1:2", epsilon=2)


def test_shipped_specs_cover_all_presets():
    specs = shipped_specs()
    assert len(specs) == len(SHIPPED_PRESETS)
    assert all(spec.validated for spec in specs)


def test_describe_renders_exact_strings():
    payload = preset_spec("osp:1:2").describe()
    assert payload["grading"] == "001"
    assert payload["beta"] == "3/2"
    assert payload["metric"][2][2] == "1/2"


def test_explicit_mapping_matches_preset():
    spec = spec_from_mapping(
        {
            "epsilon": -1,
            "grading": "001",
            "metric": ["0", "1", "0", "-1", "0", "0", "0", "0", "1/2"],
            "name": "osp12-explicit",
        }
    )
    preset = preset_spec("osp:1:2")
    assert spec.metric == preset.metric
    assert spec.inverse_metric == preset.inverse_metric
    assert spec.layout is None
    assert spec.name == "osp12-explicit"


def test_mapping_accepts_gaussian_entries():
    spec = spec_from_mapping({"epsilon": 1, "grading": "0", "metric": [["1/2*I"]]})
    assert spec.metric[0][0] == gaussian(0, Fraction(1, 2))
    assert spec.inverse_metric[0][0] == gaussian(0, -2)


def test_mapping_missing_keys_is_configuration_error():
    with pytest.raises(ConfigurationError, match="grading"):
        spec_from_mapping({"epsilon": 1, "metric": [1]})


def test_non_symmetric_metric_is_spec_error():
    with pytest.raises(SpecError):
        spec_from_mapping({"epsilon": 1, "grading": "00", "metric": [0, 1, -1, 0]})


def test_odd_even_mixing_metric_is_spec_error():
    with pytest.raises(SpecError):
        spec_from_mapping({"epsilon": 1, "grading": "01", "metric": [0, 1, 1, 0]})


def test_singular_metric_is_spec_error():
    with pytest.raises(SpecError):
        spec_from_mapping({"epsilon": 1, "grading": "00", "metric": [1, 1, 1, 1]})


def test_load_spec_file_reads_yaml(tmp_path: Path):
    target = tmp_path / "algebra.yaml"
    target.write_text("preset: osp:2:2\n", encoding="utf-8")
    assert load_spec_file(target).name == "osp(2|2)"


def test_load_spec_file_missing_file(tmp_path: Path):
    with pytest.raises(ConfigurationError, match="not found"):
        load_spec_file(tmp_path / "missing.yaml")


def test_load_spec_file_malformed_yaml(tmp_path: Path):
    target = tmp_path / "bad.yaml"
    target.write_text("metric: [1, 2\n", encoding="utf-8")
    with pytest.raises(ConfigurationError, match="malformed"):
        load_spec_file(target)
