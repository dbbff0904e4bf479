# -*- coding: utf-8 -*-
"""Pure logic for the generating-function suite."""

from __future__ import annotations

from dataclasses import replace
from typing import Any, Optional

from osp_rops.core.genfun import genfun_series, verify_genfun, verify_invariant_bridge
from osp_rops.core.osc import OscAlgebra
from osp_rops.core.report import SuiteReport


def generating_function(order: int, omega: Any, *, alg: Optional[OscAlgebra] = None, bridge_kmax: int = 0) -> SuiteReport:
    report = verify_genfun(order, omega, kmax=bridge_kmax)
    if alg is not None and bridge_kmax:
        check = verify_invariant_bridge(genfun_series(order, omega), bridge_kmax, alg)
        report.checks.append(replace(check, name="genfun=oscillator invariants"))
    return report
