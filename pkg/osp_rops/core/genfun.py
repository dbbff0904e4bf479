# -*- coding: utf-8 -*-
"""Generating function of the Hermitian invariants and the telescoping bridge.

``F(x|z) = (1 - x/2)^(omega/2 - z) (1 + x/2)^(omega/2 + z)`` is expanded as
``exp`` of its log-series, so the symbolic exponents never leave the ring.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Any, List, Optional, Sequence

from sympy.polys.ring_series import rs_exp, rs_log, rs_mul, rs_trunc

from .errors import ConfigurationError
from .report import IdentityCheck, SuiteReport
from .scalars import (
    FIELD,
    OMEGA,
    RING,
    U,
    X,
    Z,
    MultiPoly,
    TruncSeries,
    format_poly,
    gaussian,
)


logger = logging.getLogger(__name__)

MAX_ORDER = 16


@dataclass(frozen=True)
class GenFunction:
    order: int
    series: TruncSeries
    omega: Any

    def coefficient(self, k: int) -> MultiPoly:
        return self.series.coefficient(k)

    def invariant(self, k: int) -> MultiPoly:
        """``I~_k(z) = k! [x^k] F``."""
        return self.coefficient(k) * math.factorial(k)

    def shifted(self, step: int) -> TruncSeries:
        return self.series.shift_z(step)


def genfun_series(order: int = 12, omega: Any = OMEGA) -> GenFunction:
    if order < 1 or order > MAX_ORDER:
        raise ConfigurationError(f"series order must lie in 1..{MAX_ORDER}, got {order}")
    prec = order + 1
    half = RING(gaussian(1) / 2)
    half_omega = RING(omega) * half
    log_minus = rs_log(RING.one - half * X, X, prec)
    log_plus = rs_log(RING.one + half * X, X, prec)
    exponent = rs_mul(half_omega - Z, log_minus, X, prec) + rs_mul(half_omega + Z, log_plus, X, prec)
    poly = rs_exp(exponent, X, prec)
    return GenFunction(order=order, series=TruncSeries(order, rs_trunc(poly, X, prec)), omega=omega)


def _first_nonzero_order(poly: MultiPoly, order: int) -> Optional[int]:
    for k in range(order + 1):
        if poly.coeff_wrt(X, k):
            return k
    return None


def verify_ode(gf: GenFunction, *, omega_sign: int = 1) -> IdentityCheck:
    """``F_x = z F + (x^2/4) F_x - (x omega/4) F`` through order ``K - 1``.

    ``omega_sign = -1`` flips the omega term and serves as a negative control.
    """
    order = gf.order - 1
    F = gf.series.poly
    Fx = gf.series.derive().poly
    quarter = RING(gaussian(1) / 4)
    rhs = Z * F + quarter * X**2 * Fx - omega_sign * quarter * RING(gf.omega) * X * F
    residual = rs_trunc(Fx - rhs, X, order + 1)
    name = "ode" if omega_sign == 1 else "ode:flipped-omega"
    bad = _first_nonzero_order(residual, order)
    if bad is None:
        return IdentityCheck.passed(name, note=f"through x^{order}")
    return IdentityCheck.failed(name, indices=[bad], expected="0", actual=format_poly(residual.coeff_wrt(X, bad)))


def verify_shift(gf: GenFunction) -> List[IdentityCheck]:
    """``F(z+1)(1 - x/2) = F(z)(1 + x/2)`` and ``F(z-1)(1 + x/2) = F(z)(1 - x/2)``."""
    K = gf.order
    half = RING(gaussian(1) / 2)
    minus = TruncSeries.from_poly(RING.one - half * X, K)
    plus = TruncSeries.from_poly(RING.one + half * X, K)
    F = gf.series
    checks: List[IdentityCheck] = []
    for name, lhs, rhs in (
        ("shift:z+1", F.shift_z(1) * minus, F * plus),
        ("shift:z-1", F.shift_z(-1) * plus, F * minus),
        ("shift:z+2", F.shift_z(2), F.shift_z(1).shift_z(1)),
    ):
        diff = (lhs - rhs).poly
        bad = _first_nonzero_order(diff, K)
        if bad is None:
            checks.append(IdentityCheck.passed(name))
        else:
            checks.append(IdentityCheck.failed(name, indices=[bad], expected="0", actual=format_poly(diff.coeff_wrt(X, bad))))
    return checks


def g_coefficients(gf: GenFunction) -> List[MultiPoly]:
    """Coefficients of ``2F / (1 - x^2/4)`` through the series order."""
    K = gf.order
    geometric = RING.zero
    for n in range(K // 2 + 1):
        geometric += RING(gaussian(1) / 4**n) * X ** (2 * n)
    poly = rs_mul(gf.series.poly * 2, geometric, X, K + 1)
    return [poly.coeff_wrt(X, j) for j in range(K + 1)]


def verify_termwise(gf: GenFunction, kmax: Optional[int] = None) -> IdentityCheck:
    """``(z-u) I~_k(z+1) - (z+u) I~_k(z-1) = k! [(k-u) g_k - ((k+u-omega)/4) g_{k-2}]``."""
    kmax = gf.order if kmax is None else min(kmax, gf.order)
    g = g_coefficients(gf)
    omega = RING(gf.omega)
    for k in range(kmax + 1):
        inv = gf.invariant(k)
        lhs = (Z - U) * inv.compose(Z, Z + 1) - (Z + U) * inv.compose(Z, Z - 1)
        tail = g[k - 2] if k >= 2 else RING.zero
        rhs = math.factorial(k) * ((k - U) * g[k] - RING(gaussian(1) / 4) * (k + U - omega) * tail)
        if lhs != rhs:
            return IdentityCheck.failed("termwise", indices=[k], expected=format_poly(rhs), actual=format_poly(lhs))
    return IdentityCheck.passed("termwise", note=f"k <= {kmax}")


def verify_W_telescoping(gf: GenFunction, r_tilde: Sequence[Any], order: Optional[int] = None) -> SuiteReport:
    """Truncated ``W_K = sum_k r~_k/k! ((z-u) I~_k(z+1) - (z+u) I~_k(z-1))``.

    Interior combinations ``(j-u) r~_j - ((j+2+u-omega)/4) r~_{j+2}`` must vanish
    for ``j <= K-2``; what remains of ``W_K`` sits at orders ``K-1`` and ``K``.
    """
    K = gf.order if order is None else order
    if K > gf.order:
        raise ConfigurationError(f"telescoping order {K} exceeds series order {gf.order}")
    if len(r_tilde) < K + 3:
        raise ConfigurationError(f"need {K + 3} SW coefficients, got {len(r_tilde)}")
    r = [FIELD(c) for c in r_tilde]
    g = [FIELD(c) for c in g_coefficients(gf)]
    omega = FIELD(RING(gf.omega))
    quarter = FIELD(RING(gaussian(1) / 4))
    u = FIELD(U)
    checks: List[IdentityCheck] = []

    interior_bad: Optional[int] = None
    residual = FIELD.zero
    for j in range(K + 1):
        c_j = (j - u) * r[j] - quarter * (j + 2 + u - omega) * r[j + 2]
        if j <= K - 2:
            if c_j.numer and interior_bad is None:
                interior_bad = j
                checks.append(
                    IdentityCheck.failed("W:interior", indices=[j], expected="0", actual=format_poly(c_j))
                )
            residual += c_j * g[j]
    if interior_bad is None:
        checks.append(IdentityCheck.passed("W:interior", note=f"orders < {K - 1}"))

    direct = FIELD.zero
    for k in range(K + 1):
        inv = gf.invariant(k)
        bracket = (Z - U) * inv.compose(Z, Z + 1) - (Z + U) * inv.compose(Z, Z - 1)
        direct += r[k] * FIELD(bracket) / math.factorial(k)
    boundary = sum(((j - u) * r[j] * g[j] for j in (K - 1, K) if j >= 0), FIELD.zero)
    if (direct - boundary - residual).numer:
        checks.append(IdentityCheck.failed("W:telescoped-form", expected="sum of g_j c_j", actual="mismatch"))
    else:
        checks.append(IdentityCheck.passed("W:telescoped-form"))
    if interior_bad is None:
        leftover = direct - sum(
            (quarter * (j + 2 + u - omega) * r[j + 2] * g[j] for j in (K - 1, K) if j >= 0), FIELD.zero
        )
        if leftover.numer:
            checks.append(IdentityCheck.failed("W:boundary", expected="r~_{K+1}, r~_{K+2} terms", actual=format_poly(leftover)))
        else:
            checks.append(IdentityCheck.passed("W:boundary"))
    logger.debug("telescoping at K=%d: interior %s", K, "ok" if interior_bad is None else interior_bad)
    return SuiteReport.from_checks("telescoping", [verify_termwise(gf, K)] + checks)


def verify_invariant_bridge(gf: GenFunction, kmax: int, alg: Any = None) -> IdentityCheck:
    """``k! [x^k] F`` against the z-recurrence, and against ``I~_k`` elements when given an algebra."""
    from .osc import reduce_to_z, z_polynomial

    kmax = min(kmax, gf.order)
    for k in range(kmax + 1):
        expected = z_polynomial(k, gf.omega)
        if gf.invariant(k) != expected:
            return IdentityCheck.failed(
                "genfun=invariants", indices=[k], expected=format_poly(expected), actual=format_poly(gf.invariant(k))
            )
        if alg is not None:
            numeric = gf.invariant(k)
            if gf.omega == OMEGA:
                numeric = numeric.subs(OMEGA, alg.spec.omega)
            poly, residual = reduce_to_z(alg, k)
            if poly != numeric or not residual.is_zero():
                return IdentityCheck.failed(
                    "genfun=invariants", indices=[k], expected=format_poly(numeric), actual=residual.describe()
                )
    return IdentityCheck.passed("genfun=invariants", note=f"k <= {kmax}")


def verify_genfun(order: int = 12, omega: Any = OMEGA, kmax: int = 8) -> SuiteReport:
    """ODE, shift identities, ``F(0|z) = 1`` and the z-recurrence bridge for ``k <= min(order, kmax)``."""
    gf = genfun_series(order, omega)
    checks = [verify_ode(gf)]
    checks.extend(verify_shift(gf))
    if gf.coefficient(0) != RING.one:
        checks.append(IdentityCheck.failed("F(0|z)=1", expected="1", actual=format_poly(gf.coefficient(0))))
    else:
        checks.append(IdentityCheck.passed("F(0|z)=1"))
    checks.append(verify_invariant_bridge(gf, min(order, kmax)))
    return SuiteReport.from_checks("genfun", checks)


__all__ = [
    "GenFunction",
    "MAX_ORDER",
    "g_coefficients",
    "genfun_series",
    "verify_W_telescoping",
    "verify_genfun",
    "verify_invariant_bridge",
    "verify_ode",
    "verify_shift",
    "verify_termwise",
]
