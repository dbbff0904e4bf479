# -*- coding: utf-8 -*-

from fractions import Fraction
from functools import lru_cache

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from osp_rops.core.algebra import preset_spec, spec_from_mapping
from osp_rops.core.osc import (
    OscAlgebra,
    build_F,
    commutator,
    formal_adjoint,
    reduce_to_z,
    verify_contractions,
    verify_F_properties,
    verify_hermiticity,
    verify_invariance,
    verify_invariants,
    verify_scalar_projections,
    verify_symmetrizer,
    verify_z_relations,
    z_polynomial,
)
from osp_rops.core.scalars import I_UNIT, OMEGA, RING, Z, gaussian


@pytest.fixture(scope="module")
def osp12():
    return OscAlgebra(preset_spec("osp:1:2"))


def test_canonical_relations_for_osp12(osp12):
    x, d, b = osp12.gen(0), osp12.gen(1), osp12.gen(2)
    assert commutator(x, d) == osp12.scalar(-1)
    assert b * b == osp12.one()
    assert osp12.gen(0, 1) * osp12.gen(0, 2) == osp12.gen(0, 2) * osp12.gen(0, 1)
    assert osp12.gen(2, 1) * osp12.gen(2, 2) == -(osp12.gen(2, 2) * osp12.gen(2, 1))


def test_normal_form_is_associative(osp12):
    x, d, b = osp12.gen(0), osp12.gen(1), osp12.gen(2, 2)
    assert (d * x) * (b * d) == d * ((x * b) * d)
    assert (d * d) * x == d * (d * x)


@lru_cache(maxsize=None)
def _algebra(preset):
    return OscAlgebra(preset_spec(preset))


def _letters(alg):
    return st.tuples(st.integers(min_value=1, max_value=2), st.integers(min_value=0, max_value=alg.spec.dim - 1))


def _words(alg, max_size=4):
    return st.lists(_letters(alg), max_size=max_size).map(tuple)


@pytest.mark.parametrize("preset", ["osp:1:2", "osp:2:2"])
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_normal_form_is_associative_on_random_words(preset, data):
    alg = _algebra(preset)
    a, b, c = (alg.normal_form(data.draw(_words(alg))) for _ in range(3))
    assert (a * b) * c == a * (b * c)


@pytest.mark.parametrize("preset", ["osp:1:2", "osp:2:2"])
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_insertion_order_does_not_change_normal_form(preset, data):
    alg = _algebra(preset)
    word = data.draw(_words(alg, max_size=6))
    left_to_right = alg.normal_form(word)
    right_to_left = alg.one()
    for factor, a in reversed(word):
        right_to_left = alg.gen(a, factor) * right_to_left
    assert right_to_left == left_to_right
    split = data.draw(st.integers(min_value=0, max_value=len(word)))
    assert alg.normal_form(word[:split]) * alg.normal_form(word[split:]) == left_to_right


@pytest.mark.parametrize("preset", ["osp:1:2", "osp:2:2"])
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_adjacent_swap_follows_defining_relation(preset, data):
    alg = _algebra(preset)
    spec = alg.spec
    head, tail = data.draw(_words(alg, max_size=3)), data.draw(_words(alg, max_size=3))
    first, second = data.draw(_letters(alg)), data.draw(_letters(alg))
    a, b = first[1], second[1]
    sign = -spec.epsilon * (-1) ** (spec.grading[a] * spec.grading[b])
    expected = alg.normal_form(head + (second, first) + tail).scale(gaussian(sign))
    if first[0] == second[0]:
        expected = expected + alg.normal_form(head + tail).scale(spec.eps_bar(a, b))
    assert alg.normal_form(head + (first, second) + tail) == expected


def test_z_polynomial_recurrence():
    assert z_polynomial(0) == RING.one
    assert z_polynomial(1) == Z
    assert z_polynomial(2, -1) == Z**2 + RING(gaussian(Fraction(1, 4)))
    assert z_polynomial(2) == Z**2 - OMEGA * RING(gaussian(Fraction(1, 4)))


def test_invariant_zero_is_unit(osp12):
    assert osp12.invariant(0) == osp12.one()
    assert osp12.z() == osp12.invariant(1).scale(I_UNIT)


def test_reduce_to_z_leaves_no_residual(osp12):
    for k in range(4):
        poly, residual = reduce_to_z(osp12, k)
        assert residual.is_zero(), (k, residual.describe())
        assert poly == z_polynomial(k, -1)


def test_invariants_commute_with_F(osp12):
    generators = (build_F(osp12, 1), build_F(osp12, 2))
    for k in range(3):
        assert verify_invariance(osp12, k, generators).status == "pass"


def test_invariant_suite_for_osp12(osp12):
    report = verify_invariants(osp12, 4)
    assert report.status == "pass", report.witnesses


def test_contractions_and_F_properties(osp12):
    assert verify_contractions(osp12).status == "pass"
    report = verify_F_properties(osp12)
    assert report.status in ("pass", "skipped"), report.witnesses


def test_symmetrizer_matches_permutation_sum(osp12):
    report = verify_symmetrizer(osp12, 3)
    assert report.status == "pass", report.witnesses


def test_z_is_hermitian(osp12):
    z = osp12.z()
    assert formal_adjoint(z) == z
    assert verify_hermiticity(osp12, 3).status == "pass"


def test_hermiticity_skips_custom_layouts():
    spec = spec_from_mapping({"epsilon": 1, "grading": "0", "metric": ["1/2"]})
    report = verify_hermiticity(OscAlgebra(spec), 2)
    assert report.status == "skipped"


def test_z_relations_and_projections(osp12):
    assert verify_z_relations(osp12).status == "pass"
    assert verify_scalar_projections(osp12).status == "pass"


def test_sigma_minus_i_gives_same_relations():
    alg = OscAlgebra(preset_spec("osp:1:2"), sigma=-I_UNIT)
    assert verify_z_relations(alg).status == "pass"
