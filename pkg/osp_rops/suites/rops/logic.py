# -*- coding: utf-8 -*-
"""Pure logic for the R-operator suites."""

from __future__ import annotations

import logging
from typing import Any, Optional, Sequence

from osp_rops.core.algebra import AlgebraSpec
from osp_rops.core.fock import FockRep
from osp_rops.core.report import IdentityCheck, SuiteReport
from osp_rops.core.rops import (
    FTTOperator,
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
from osp_rops.core.scalars import Scalar
from osp_rops.core.suite import merge_reports


logger = logging.getLogger(__name__)


def _negative_control(name: str, report: SuiteReport) -> IdentityCheck:
    """A deliberately broken input has to be rejected."""
    if report.status == "fail":
        return IdentityCheck.passed(name)
    return IdentityCheck.failed(name, expected="fail", actual=report.status)


def series_coefficients(kmax: int, order: int, omega: Any, sigma: Scalar) -> SuiteReport:
    coefficients = verify_sw_coefficients(sw_coefficients(kmax, omega, sigma))
    fid = verify_sw_satisfies_fid(order, omega, sigma=sigma)
    broken = verify_sw_satisfies_fid(order, omega, sigma=sigma, broken=True)
    report = merge_reports("sw", [coefficients, fid])
    report.checks.append(_negative_control("perturbed coefficients rejected", broken))
    return report


def gamma_operator(ftt: FTTOperator) -> SuiteReport:
    difference = verify_ftt_difference_eq(ftt)
    perturbed = verify_ftt_difference_eq(ftt_operator(ftt.decomposition, perturbed=True))
    report = merge_reports("ftt", [difference, verify_rll_osc_rep(ftt)])
    report.checks.insert(0, verify_ftt_invariance(ftt))
    report.checks.append(_negative_control("perturbed chain step rejected", perturbed))
    report.notes.append(f"normalization lcm: {ftt.scale.as_expr()}")
    return report


def special_cases(rep: FockRep, ftt: FTTOperator) -> SuiteReport:
    special = special_case_operator(rep)
    report = verify_special_equals_generic(special, ftt)
    check = verify_two_fermion_rewrite(special)
    if check.status == "skipped":
        logger.info("%s: %s", check.name, check.note)
    report.checks.append(check)
    return report


def sigma_choice(spec: AlgebraSpec, cutoff: int) -> SuiteReport:
    return verify_sigma_equivalence(spec, cutoff)


def numeric_agreement(
    ftt: FTTOperator,
    u_samples: Sequence[str],
    *,
    lambdas: Optional[Sequence[str]] = None,
    tol: float = 1e-6,
    gamma_tol: float = 1e-12,
    dps: int = 50,
    partial: int = 40,
) -> SuiteReport:
    spectrum = ftt.decomposition.eigenvalues()
    gamma = verify_gamma_ratios(ftt.values, u_samples, tol=gamma_tol, dps=dps)
    series = sw_ftt_numeric_equivalence(
        ftt.rep.spec,
        u_samples,
        list(lambdas) if lambdas is not None else spectrum,
        partial=partial,
        tol=tol,
        dps=dps,
        sigma=ftt.rep.algebra.sigma,
        spectrum=spectrum,
    )
    return merge_reports("numeric", [gamma, series])
