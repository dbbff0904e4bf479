# -*- coding: utf-8 -*-

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from osp_rops.core.errors import ConfigurationError, DomainError
from osp_rops.core.scalars import (
    FIELD,
    I_UNIT,
    RING,
    U,
    X,
    Z,
    TruncSeries,
    format_scalar,
    gaussian,
    parse_scalar,
    poly_arith,
    ratfn,
    ratfn_equal,
    ratfn_evaluate,
    ratfn_reduce,
    series_ops,
    to_scalar,
)


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=50)
gaussians = st.builds(gaussian, rationals, rationals)
small_polys = st.builds(
    lambda a, b, c: RING(a) + RING(b) * U + RING(c) * Z * U,
    gaussians,
    gaussians,
    gaussians,
)


def test_parse_scalar_accepts_rationals_and_gaussians():
    assert parse_scalar("1/2") == gaussian(Fraction(1, 2))
    assert parse_scalar("-3") == gaussian(-3)
    assert parse_scalar("I/2") == gaussian(0, Fraction(1, 2))
    assert parse_scalar("1/2 + 3*I") == gaussian(Fraction(1, 2), 3)


def test_parse_scalar_rejects_non_exact_text():
    with pytest.raises(ConfigurationError):
        parse_scalar("x + 1")


def test_format_scalar_uses_p_over_q_strings():
    assert format_scalar(gaussian(Fraction(3, 2))) == "3/2"
    assert format_scalar(gaussian(0, -1)) == "-1*I"
    assert format_scalar(gaussian(Fraction(1, 2), Fraction(-1, 3))) == "1/2-1/3*I"
    assert format_scalar(I_UNIT * I_UNIT) == "-1"


def test_to_scalar_accepts_int_fraction_and_string():
    assert to_scalar(2) == gaussian(2)
    assert to_scalar(Fraction(-1, 7)) == gaussian("-1/7")
    assert to_scalar("2/5") == gaussian(Fraction(2, 5))


@given(gaussians, gaussians, gaussians)
def test_gaussian_rationals_form_a_ring(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a


@given(small_polys, small_polys)
def test_poly_arith_matches_ring_operators(p, q):
    assert poly_arith(p, q, "add") == p + q
    assert poly_arith(p, q, "sub") == p - q
    assert poly_arith(p, q, "mul") == p * q


def test_poly_arith_rejects_unknown_operation():
    with pytest.raises(ConfigurationError):
        poly_arith(U, Z, "div")


@settings(max_examples=50)
@given(small_polys, small_polys, small_polys)
def test_ratfn_cancels_common_factors(p, q, common):
    if not q or not common:
        return
    r = ratfn(p * common, q * common)
    assert ratfn_equal(r, ratfn(p, q))
    assert ratfn_equal(ratfn_reduce(r), r)
    assert ratfn_reduce(r).denom.degree(U) <= q.degree(U)


def test_ratfn_zero_denominator_is_a_domain_error():
    with pytest.raises(DomainError):
        ratfn(U, 0)


def test_ratfn_evaluate_substitutes_exact_values():
    r = ratfn(1 + U, 1 - U)
    value = ratfn_evaluate(r, u="1/3")
    assert ratfn_equal(value, FIELD(RING(gaussian(2))))


def test_ratfn_evaluate_at_pole_raises():
    with pytest.raises(DomainError):
        ratfn_evaluate(ratfn(1 + U, 1 - U), u=1)


def test_trunc_series_product_drops_high_orders():
    s = TruncSeries.from_coefficients([1, 1], 2)
    square = s * s
    assert square.coefficients() == [RING.one, RING(2), RING.one]
    cube = square * s
    assert cube.coefficient(3) == RING.zero
    assert cube.coefficient(2) == RING(3)


def test_trunc_series_order_mismatch_is_configuration_error():
    with pytest.raises(ConfigurationError):
        TruncSeries.from_coefficients([1], 2) + TruncSeries.from_coefficients([1], 3)


def test_trunc_series_derive_and_shift():
    s = TruncSeries.from_poly(Z * X + X**2, 3)
    assert s.derive().coefficient(0) == Z
    assert s.derive().coefficient(1) == RING(2)
    assert s.shift_z(1).coefficient(1) == Z + 1
    assert series_ops(s, None, "shift-eval").coefficient(0) == RING.zero


def test_series_ops_needs_two_operands_for_product():
    with pytest.raises(ConfigurationError):
        series_ops(TruncSeries.from_coefficients([1], 1), None, "mul")
