# -*- coding: utf-8 -*-
"""Pure logic for the oscillator suites."""

from __future__ import annotations

import logging

from osp_rops.core.osc import (
    OscAlgebra,
    verify_contractions,
    verify_F_properties,
    verify_hermiticity,
    verify_invariants,
    verify_rll_osc,
    verify_scalar_projections,
    verify_symmetrizer,
    verify_z_relations,
)
from osp_rops.core.report import SuiteReport
from osp_rops.core.suite import merge_reports


logger = logging.getLogger(__name__)


def f_generators(alg: OscAlgebra) -> SuiteReport:
    return merge_reports("osc", [verify_contractions(alg), verify_F_properties(alg)])


def rll_osc(alg: OscAlgebra) -> SuiteReport:
    return verify_rll_osc(alg)


def invariants(alg: OscAlgebra, *, kmax: int = 6) -> SuiteReport:
    logger.info("invariants up to k=%d on %s", kmax, alg.spec.name)
    return merge_reports(
        "invariants",
        [verify_invariants(alg, kmax), verify_symmetrizer(alg, kmax), verify_hermiticity(alg, kmax)],
    )


def z_relations(alg: OscAlgebra) -> SuiteReport:
    return merge_reports("z_relations", [verify_z_relations(alg), verify_scalar_projections(alg)])
