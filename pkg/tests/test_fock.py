# -*- coding: utf-8 -*-

import pytest
from sympy.polys.domains import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix

from osp_rops.core.algebra import preset_spec, spec_from_mapping
from osp_rops.core.errors import ConfigurationError, SpecError, TruncationError
from osp_rops.core.fock import (
    CliffordModule,
    FockRep,
    build_rep,
    chain_key,
    default_cutoff,
    fermion_projectors,
    fermion_rep,
    fermion_spectrum,
    fmt_eigenvalue,
    hermitian_conjugate,
    hermitian_frame,
    matrix_check,
    spectral_z,
    spectrum_table,
    verify_fermion_projectors,
    verify_hermiticity_on,
    verify_rep_identities,
    verify_spectral,
)
from osp_rops.core.scalars import I_UNIT, RING


@pytest.fixture(scope="module")
def osp12_rep():
    return build_rep(preset_spec("osp:1:2"), 3)


def test_fermion_spectrum():
    assert fermion_spectrum(0) == [QQ(0)]
    assert fermion_spectrum(1) == [QQ(-1, 2), QQ(1, 2)]
    assert fermion_spectrum(2) == [QQ(-1), QQ(0), QQ(1)]


def test_chain_key_and_formatting():
    assert chain_key(QQ(-1, 2)) == QQ(3, 2)
    assert chain_key(QQ(5, 2)) == QQ(1, 2)
    assert chain_key(QQ(-2)) == QQ(0)
    assert fmt_eigenvalue(QQ(-1, 2)) == "-1/2"


def test_clifford_module_dimensions():
    assert CliffordModule(1).dim == 2
    assert CliffordModule(2).dim == 2
    assert CliffordModule(3).dim == 4


def test_cutoff_below_two_is_rejected():
    with pytest.raises(ConfigurationError):
        build_rep(preset_spec("osp:1:2"), 1)


def test_unsupported_realizations_are_spec_errors():
    with pytest.raises(SpecError):
        FockRep(preset_spec("osp:1:2", epsilon=1), 2)
    custom = spec_from_mapping({"epsilon": 1, "grading": "0", "metric": ["1/2"]})
    with pytest.raises(SpecError):
        FockRep(custom, 2)


def test_safe_subspace_budget(osp12_rep):
    safe = osp12_rep.safe_subspace(1)
    assert safe.d_max == 2
    assert safe.size < osp12_rep.dim
    with pytest.raises(TruncationError):
        osp12_rep.safe_subspace(4)


def test_representation_identities_for_osp12(osp12_rep):
    report = verify_rep_identities(osp12_rep)
    assert report.status == "pass", report.witnesses


def test_spectral_decomposition_of_z(osp12_rep):
    decomposition = spectral_z(osp12_rep)
    report = verify_spectral(decomposition)
    assert report.status == "pass", report.witnesses
    eigenvalues = decomposition.eigenvalues()
    assert eigenvalues == sorted(eigenvalues)
    assert {-lam for lam in eigenvalues} == set(eigenvalues)
    assert all(lam.denominator == 2 for lam in eigenvalues)
    assert sum(decomposition.multiplicities().values()) == osp12_rep.dim


def test_spectrum_table_rows(osp12_rep):
    rows = spectrum_table(spectral_z(osp12_rep))
    assert rows
    assert set(rows[0]) == {"lambda", "multiplicity", "degree_block"}
    assert rows[0]["degree_block"] == 0
    assert [row["degree_block"] for row in rows] == sorted(row["degree_block"] for row in rows)


def test_spectrum_needs_a_boson_mode():
    with pytest.raises(SpecError):
        spectral_z(build_rep(preset_spec("so:3", epsilon=-1), 2))


@pytest.mark.parametrize("preset", ["osp:1:2", "osp:2:2"])
def test_fermion_projectors(preset):
    family = fermion_projectors(fermion_rep(preset_spec(preset)))
    report = verify_fermion_projectors(family)
    assert report.status == "pass", report.witnesses


def test_conjugate_transpose_of_x_is_d(osp12_rep):
    x, d = osp12_rep.generator(0, 1), osp12_rep.generator(1, 1)
    assert matrix_check("x+", hermitian_conjugate(osp12_rep, x), d).status == "pass"
    assert matrix_check("d+", hermitian_conjugate(osp12_rep, d), x).status == "pass"


@pytest.mark.parametrize("preset", ["osp:1:2", "osp:2:2"])
def test_z_is_hermitian_for_the_gram_form(preset):
    rep = build_rep(preset_spec(preset), 3)
    checks = {check.name: check for check in verify_hermiticity_on(rep)}
    assert set(checks) == {"conjugation rules", "z+=z", "rep(z+)=rep(z)+"}
    assert all(check.status == "pass" for check in checks.values()), checks


def test_hermiticity_detects_a_perturbed_entry(osp12_rep):
    z = osp12_rep.rep_of(hermitian_frame(osp12_rep.algebra.z()))
    safe = osp12_rep.safe_subspace(2)
    assert matrix_check("z+=z", hermitian_conjugate(osp12_rep, z), z, safe).status == "pass"
    perturbed = z.add(DomainMatrix.from_dod({0: {0: I_UNIT}}, z.shape, QQ_I))
    check = matrix_check("z+=z", hermitian_conjugate(osp12_rep, perturbed), perturbed, safe)
    assert check.status == "fail"
    assert check.witness.indices == [0, 0]


def test_conjugate_transpose_needs_scalar_entries(osp12_rep):
    symbolic = osp12_rep.rep_of(osp12_rep.algebra.z().scale(RING.gens[0]))
    with pytest.raises(ConfigurationError):
        hermitian_conjugate(osp12_rep, symbolic)


@pytest.mark.parametrize(
    "preset, expected",
    [("osp:1:2", 8), ("osp:3:2", 8), ("osp:2:4", 4), ("sp:4", 4), ("so:3", 4)],
)
def test_default_cutoff_follows_boson_modes(preset, expected):
    assert default_cutoff(preset_spec(preset)) == expected


def test_default_cutoff_of_custom_layouts():
    custom = spec_from_mapping({"epsilon": 1, "grading": "0", "metric": ["1/2"]})
    assert default_cutoff(custom) == 4
