# -*- coding: utf-8 -*-

import pytest

from osp_rops.core.algebra import preset_spec
from osp_rops.core.brauer import (
    BrauerRep,
    build_rho_hat,
    decompose_r_hat,
    r_hat,
    verify_braid_ybe,
    verify_brauer_relations,
    verify_graded_ybe,
    verify_rll_defrep,
    verify_unitarity,
)
from osp_rops.core.scalars import RING, U


@pytest.mark.parametrize("preset", ["osp:1:2", "osp:2:2", "so:3", "sp:2"])
def test_brauer_relations_hold(preset):
    report = verify_brauer_relations(BrauerRep.build(preset_spec(preset)))
    assert report.status == "pass", report.witnesses
    assert report.identity_count > 10


def test_unitarity_for_osp12():
    rep = BrauerRep.build(preset_spec("osp:1:2"))
    report = verify_unitarity(rep)
    assert report.status == "pass", report.witnesses
    assert report.check("ybe:rho").status == "pass"


def test_rho_hat_at_zero_is_minus_beta():
    spec = preset_spec("osp:1:2")
    rep = BrauerRep.build(spec, n=2)
    assert rep.image(build_rho_hat(spec, 0)) == rep.one().scale(RING(spec.beta) * -1)


def test_braid_and_graded_ybe_for_osp12():
    spec = preset_spec("osp:1:2")
    assert verify_braid_ybe(spec).status == "pass"
    assert verify_graded_ybe(spec).status == "pass"
    assert verify_graded_ybe(spec, twisted=True).status == "pass"


def test_graded_ybe_without_sign_operator_fails():
    check = verify_graded_ybe(preset_spec("osp:1:2"), drop_sign=True)
    assert check.status == "fail"
    assert check.witness is not None


def test_rll_in_defining_representation():
    assert verify_rll_defrep(preset_spec("osp:1:2")).status == "pass"


def test_r_hat_decomposes_into_three_terms():
    spec = preset_spec("osp:1:2")
    beta = RING(spec.beta)
    coeffs = decompose_r_hat(spec, r_hat(spec, U, 1, 2, 2))
    assert coeffs == (U * (U + beta), U + beta, -U)
