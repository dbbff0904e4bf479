# -*- coding: utf-8 -*-
"""Pure logic for the Fock suites."""

from __future__ import annotations

from osp_rops.core.fock import (
    FockRep,
    SpectralDecomposition,
    fermion_projectors,
    fermion_rep,
    verify_fermion_projectors,
    verify_rep_identities,
    verify_spectral,
)
from osp_rops.core.report import SuiteReport
from osp_rops.core.suite import merge_reports


def representation(rep: FockRep) -> SuiteReport:
    fermions = fermion_projectors(fermion_rep(rep.spec, sigma=rep.algebra.sigma))
    return merge_reports("fock", [verify_rep_identities(rep), verify_fermion_projectors(fermions)])


def spectrum(decomposition: SpectralDecomposition) -> SuiteReport:
    report = verify_spectral(decomposition)
    report.notes.append(f"{len(decomposition.eigenvalues())} distinct eigenvalues at C={decomposition.rep.cutoff}")
    return report
