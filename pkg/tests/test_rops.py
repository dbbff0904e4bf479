# -*- coding: utf-8 -*-

from dataclasses import replace

import pytest
from sympy.polys.domains import QQ

from osp_rops.core.algebra import preset_spec
from osp_rops.core.errors import ConfigurationError
from osp_rops.core.fock import build_rep, spectral_z
from osp_rops.core.rops import (
    SW_MAX_K,
    chain_step,
    chain_values,
    closed_form_coefficient,
    ftt_operator,
    special_case_operator,
    sw_coefficients,
    sw_ftt_numeric_equivalence,
    verify_ftt_difference_eq,
    verify_ftt_invariance,
    verify_gamma_ratios,
    verify_rll_osc_rep,
    verify_sigma_equivalence,
    verify_special_equals_generic,
    verify_sw_coefficients,
    verify_sw_satisfies_fid,
    verify_two_fermion_rewrite,
)
from osp_rops.core.scalars import FIELD, I_UNIT, RING, U, ratfn, ratfn_equal


@pytest.fixture(scope="module")
def osp12_ftt():
    return ftt_operator(spectral_z(build_rep(preset_spec("osp:1:2"), 4)))


def test_sw_coefficients_for_osp12():
    sw = sw_coefficients(4, omega=-1)
    assert sw.r[0] == FIELD.one
    assert sw.r[1] == FIELD.one
    assert ratfn_equal(sw.r[2], ratfn(4 * U, U + 3))
    assert ratfn_equal(sw.r[3], ratfn(4 * (U - 1), U + 4))
    assert len(sw.r) == 5


def test_sw_tilde_uses_minus_sigma_powers():
    sw = sw_coefficients(3, omega=-1, sigma=I_UNIT)
    assert ratfn_equal(sw.tilde[1], sw.r[1] * FIELD(RING(-I_UNIT)))
    assert ratfn_equal(sw.tilde[2], -sw.r[2])


def test_sw_kmax_bounds():
    with pytest.raises(ConfigurationError):
        sw_coefficients(0)
    with pytest.raises(ConfigurationError):
        sw_coefficients(SW_MAX_K + 1)


def test_closed_form_matches_recurrence_symbolically():
    sw = sw_coefficients(10)
    for k, value in enumerate(sw.r):
        assert ratfn_equal(value, closed_form_coefficient(k, sw.omega))


def test_verify_sw_coefficients_passes():
    report = verify_sw_coefficients(sw_coefficients(8, omega=-1))
    assert report.status == "pass"
    assert report.check("tilde map").status == "pass"
    assert report.check("closed form").note == "9 components"


def test_closed_form_comparison_reports_a_mismatch():
    sw = sw_coefficients(6, omega=-1)
    broken = replace(sw, r=sw.r[:3] + (sw.r[3] * 2,) + sw.r[4:])
    check = verify_sw_coefficients(broken).check("closed form")
    assert check.status == "fail"
    assert check.witness.indices == [3]


def test_chain_step_and_perturbation():
    assert ratfn_equal(chain_step(QQ(0)), ratfn(1 + U, 1 - U))
    assert not ratfn_equal(chain_step(QQ(0), perturbed=True), chain_step(QQ(0)))


def test_chain_values_start_at_one_on_each_chain():
    values = chain_values([QQ(-1, 2), QQ(3, 2), QQ(0)])
    assert values[QQ(-1, 2)] == FIELD.one
    assert values[QQ(0)] == FIELD.one
    assert ratfn_equal(values[QQ(3, 2)], ratfn(1 + 2 * U, 1 - 2 * U))


def test_chain_values_padding_extends_both_ends():
    values = chain_values([QQ(0)], pad=1)
    assert set(values) == {QQ(-2), QQ(0), QQ(2)}
    assert ratfn_equal(values[QQ(2)] / values[QQ(-2)], chain_step(QQ(-2)) * chain_step(QQ(0)))


def test_sw_satisfies_difference_equation_and_rejects_perturbation():
    assert verify_sw_satisfies_fid(6).status == "pass"
    assert verify_sw_satisfies_fid(6, omega=-1).status == "pass"
    assert verify_sw_satisfies_fid(6, broken=True).status == "fail"


def test_ftt_operator_on_osp12(osp12_ftt):
    assert verify_ftt_invariance(osp12_ftt).status == "pass"
    assert verify_ftt_difference_eq(osp12_ftt).status == "pass"
    assert verify_rll_osc_rep(osp12_ftt).status == "pass"


def test_perturbed_chain_step_breaks_difference_equation(osp12_ftt):
    perturbed = ftt_operator(osp12_ftt.decomposition, perturbed=True)
    assert verify_ftt_difference_eq(perturbed).status == "fail"


def test_ftt_dump_rows(osp12_ftt):
    rows = osp12_ftt.dump(["1/3"])
    assert len(rows) == len(osp12_ftt.decomposition.eigenvalues())
    assert set(rows[0]) == {"lambda", "value", "u=1/3"}
    assert rows[0]["value"] == "1"


def test_special_case_operator_matches_generic_osp12(osp12_ftt):
    special = special_case_operator(osp12_ftt.rep)
    assert verify_special_equals_generic(special, osp12_ftt).status == "pass"
    assert verify_two_fermion_rewrite(special).status == "skipped"


def test_two_fermion_rewrite_osp22():
    rep = build_rep(preset_spec("osp:2:2"), 3)
    special = special_case_operator(rep)
    assert verify_two_fermion_rewrite(special).status == "pass"
    assert verify_special_equals_generic(special, ftt_operator(spectral_z(rep))).status == "pass"


def test_sigma_equivalence():
    assert verify_sigma_equivalence(preset_spec("osp:1:2"), 3).status == "pass"


def test_gamma_ratios(osp12_ftt):
    report = verify_gamma_ratios(osp12_ftt.values, ["1/3", "2/5"])
    assert report.status == "pass"


def test_numeric_series_agreement(osp12_ftt):
    spectrum = osp12_ftt.decomposition.eigenvalues()
    report = sw_ftt_numeric_equivalence(
        osp12_ftt.rep.spec, ["1/3"], spectrum, partial=40, dps=30, spectrum=spectrum
    )
    assert report.status in ("pass", "inconclusive")
    assert all(check.status != "fail" for check in report.checks)


def test_numeric_rejects_short_partial_sums():
    with pytest.raises(ConfigurationError):
        sw_ftt_numeric_equivalence(preset_spec("osp:1:2"), ["1/3"], [QQ(1, 2)], partial=3)
