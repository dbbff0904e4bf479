# -*- coding: utf-8 -*-

import math

import pytest

from osp_rops.core.algebra import preset_spec
from osp_rops.core.errors import ConfigurationError
from osp_rops.core.genfun import (
    MAX_ORDER,
    g_coefficients,
    genfun_series,
    verify_genfun,
    verify_invariant_bridge,
    verify_ode,
    verify_shift,
    verify_termwise,
)
from osp_rops.core.osc import OscAlgebra, z_polynomial
from osp_rops.core.scalars import OMEGA, RING, Z


def test_low_coefficients_of_the_generating_function():
    gf = genfun_series(4)
    assert gf.coefficient(0) == RING.one
    assert gf.coefficient(1) == Z
    assert gf.invariant(2) == z_polynomial(2)
    assert gf.invariant(3) == z_polynomial(3)


def test_series_order_is_bounded():
    with pytest.raises(ConfigurationError):
        genfun_series(0)
    with pytest.raises(ConfigurationError):
        genfun_series(MAX_ORDER + 1)


def test_ode_and_shift_hold_symbolically():
    gf = genfun_series(12)
    assert verify_ode(gf).status == "pass"
    assert all(check.status == "pass" for check in verify_shift(gf))


def test_flipped_omega_ode_is_rejected():
    check = verify_ode(genfun_series(6), omega_sign=-1)
    assert check.status == "fail"
    assert check.witness.indices == [1]


def test_numeric_omega_series():
    gf = genfun_series(6, omega=-1)
    assert gf.invariant(4) == z_polynomial(4, -1)


def test_g_coefficients_start_with_twice_F():
    gf = genfun_series(6)
    g = g_coefficients(gf)
    assert g[0] == RING(2)
    assert g[1] == 2 * Z
    assert len(g) == 7


def test_termwise_telescoping_identity():
    assert verify_termwise(genfun_series(8)).status == "pass"


def test_verify_genfun_report():
    report = verify_genfun(8, OMEGA)
    assert report.status == "pass", report.witnesses
    assert report.check("genfun=invariants").status == "pass"
    assert report.check("genfun=invariants").note == "k <= 8"


def test_verify_genfun_bridge_follows_kmax():
    assert verify_genfun(10, OMEGA, kmax=3).check("genfun=invariants").note == "k <= 3"
    assert verify_genfun(4, OMEGA, kmax=8).check("genfun=invariants").note == "k <= 4"


def test_bridge_to_oscillator_invariants():
    alg = OscAlgebra(preset_spec("osp:1:2"))
    check = verify_invariant_bridge(genfun_series(6), 3, alg)
    assert check.status == "pass"


def test_invariant_is_factorial_times_coefficient():
    gf = genfun_series(5)
    assert gf.invariant(5) == gf.coefficient(5) * math.factorial(5)
