# -*- coding: utf-8 -*-

import pytest

from osp_rops.core.algebra import preset_spec, shipped_specs
from osp_rops.core.errors import ConfigurationError
from osp_rops.core.scalars import ONE, ZERO, gaussian
from osp_rops.core.graded import (
    GradedOperator,
    OperatorWords,
    build_K,
    build_defrep_generators,
    build_superperm,
    check_generator_closure,
    check_trace_identities,
    identity,
    lower_index,
    raise_index,
    supertrace,
    verify_osp_defrep,
    verify_pk_identities,
)


def test_superperm_squares_to_identity():
    spec = preset_spec("osp:1:2")
    p = build_superperm(spec, 1, 2, 2)
    assert p @ p == identity(spec, 2)


def test_K_squares_to_omega_K():
    for spec in (preset_spec("osp:1:2"), preset_spec("so:3"), preset_spec("sp:2")):
        k = build_K(spec, 1, 2, 2)
        assert k @ k == k.scale(spec.omega)


def test_superperm_has_graded_sign_on_odd_pairs():
    spec = preset_spec("osp:1:2")
    p = build_superperm(spec, 1, 2, 2)
    assert p.entry((2, 2), (2, 2)) == -1
    assert p.entry((0, 1), (1, 0)) == 1


def test_operators_on_different_powers_do_not_mix():
    spec = preset_spec("osp:1:2")
    with pytest.raises(ConfigurationError):
        identity(spec, 2) @ identity(spec, 3)


def test_operator_words_reject_unknown_tokens():
    words = OperatorWords(preset_spec("osp:1:2"), 3)
    with pytest.raises(ConfigurationError):
        words.expression("Q12 P23")
    with pytest.raises(ConfigurationError):
        words.token("P1")


def test_operator_words_expression_with_coefficients():
    spec = preset_spec("osp:1:2")
    words = OperatorWords(spec, 2)
    assert words.expression("K12 K12 - omega*K12").is_zero()
    assert words.expression("0").is_zero()


@pytest.mark.parametrize("spec", shipped_specs(), ids=lambda s: s.name)
def test_pk_identities_hold_for_shipped_specs(spec):
    report = verify_pk_identities(spec)
    assert report.status == "pass", report.witnesses


def test_osp_defrep_relations_for_osp12():
    report = verify_osp_defrep(preset_spec("osp:1:2"))
    assert report.status == "pass", report.witnesses
    assert report.check("closure").status == "pass"
    assert report.check("supertrace(G)=0").status == "pass"


def test_generator_closure_for_osp22():
    assert check_generator_closure(preset_spec("osp:2:2")) == []


@pytest.mark.parametrize("preset, expected", [("osp:1:2", 1), ("osp:2:2", 0), ("osp:1:4", 3), ("so:3", 3)])
def test_supertrace_of_identity_counts_parities(preset, expected):
    spec = preset_spec(preset)
    traced = supertrace(identity(spec, 1), 1)
    assert traced.n == 0
    assert traced.entry((), ()) == expected


def test_supertrace_of_K_over_factor_two_matches_hand_contraction():
    spec = preset_spec("osp:1:2")
    traced = supertrace(build_K(spec, 1, 2, 2), 2)
    for a in range(spec.dim):
        for c in range(spec.dim):
            hand = sum(
                (spec.eps_bar(a, b) * spec.eps(c, b) * (-1) ** spec.grading[b] for b in range(spec.dim)),
                ZERO,
            )
            assert traced.entry((a,), (c,)) == hand
    assert traced == identity(spec, 1).scale(-1)


def test_supertrace_factor_out_of_range():
    spec = preset_spec("osp:1:2")
    with pytest.raises(ConfigurationError):
        supertrace(identity(spec, 2), 3)


@pytest.mark.parametrize("preset", ["osp:1:2", "osp:2:2"])
def test_defrep_generators_are_supertraceless(preset):
    spec = preset_spec(preset)
    for key, matrix in build_defrep_generators(spec).items():
        op = GradedOperator.from_dod(spec, 1, matrix.to_dod())
        assert supertrace(op, 1).is_zero(), key


@pytest.mark.parametrize("preset", ["osp:1:2", "osp:2:2"])
def test_lowering_then_raising_is_identity(preset):
    spec = preset_spec(preset)
    vector = [gaussian(k + 1, -k) for k in range(spec.dim)]
    assert raise_index(spec, lower_index(spec, vector)) == vector
    assert lower_index(spec, raise_index(spec, vector)) == vector
    unit = [ONE] + [ZERO] * (spec.dim - 1)
    assert lower_index(spec, unit) != unit


@pytest.mark.parametrize("preset", ["osp:1:2", "osp:2:2", "so:3", "sp:4"])
def test_trace_identities_are_part_of_pk(preset):
    spec = preset_spec(preset)
    checks = check_trace_identities(spec)
    assert [c.name for c in checks] == ["str_2 P_12=1", "str_2 K_12=eps", "raise(lower(v))=v"]
    assert all(c.status == "pass" for c in checks)
    report = verify_pk_identities(spec)
    assert report.check("str_2 K_12=eps").status == "pass"
