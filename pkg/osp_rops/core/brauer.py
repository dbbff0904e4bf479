# -*- coding: utf-8 -*-
"""Brauer algebra generators on V^{(x)n}, the R-matrices built from them and
their polynomial Yang-Baxter, unitarity and RLL checks."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

from .algebra import AlgebraSpec
from .graded import (
    GradedOperator,
    build_K,
    build_sign_op,
    build_superperm,
    identity,
)
from .report import IdentityCheck, SuiteReport
from .scalars import RING, U, V, MultiPoly, format_poly


logger = logging.getLogger(__name__)


@dataclass
class BrauerRep:
    """``s_i = eps P_{i,i+1}`` and ``e_i = K_{i,i+1}`` on ``n`` factors."""

    spec: AlgebraSpec
    n: int = 3
    s: List[GradedOperator] = field(default_factory=list)
    e: List[GradedOperator] = field(default_factory=list)

    @classmethod
    def build(cls, spec: AlgebraSpec, n: int = 3) -> "BrauerRep":
        s = [build_superperm(spec, i, i + 1, n).scale(spec.epsilon) for i in range(1, n)]
        e = [build_K(spec, i, i + 1, n) for i in range(1, n)]
        return cls(spec=spec, n=n, s=s, e=e)

    @property
    def omega(self) -> int:
        return self.spec.omega

    @property
    def beta(self) -> Any:
        return self.spec.beta

    def one(self) -> GradedOperator:
        return identity(self.spec, self.n)

    def image(self, element: "BrauerElement") -> GradedOperator:
        total = self.one().scale(0)
        for word, coeff in element.terms.items():
            op = self.one()
            for letter in word:
                kind, i = letter[0], int(letter[1:])
                op = op @ (self.s[i - 1] if kind == "s" else self.e[i - 1])
            total = total + op.scale(coeff)
        return total


@dataclass(frozen=True)
class BrauerElement:
    """Linear combination of words in ``s_i``/``e_i`` with polynomial coefficients."""

    terms: Dict[Tuple[str, ...], MultiPoly]


def build_rho_hat(spec: AlgebraSpec, spectral: Any, i: int = 1) -> BrauerElement:
    """``rho_i(u) = u(u+beta) s_i - (u+beta) 1 + u e_i``."""
    u = RING(spectral)
    beta = RING(spec.beta)
    return BrauerElement(
        terms={
            (f"s{i}",): u * (u + beta),
            (): -(u + beta),
            (f"e{i}",): u,
        }
    )


def r_hat(spec: AlgebraSpec, spectral: Any, i: int, j: int, n: int) -> GradedOperator:
    """Braid R-matrix ``u(u+beta) P - eps (u+beta) 1 + eps u K`` on factors (i, j)."""
    u = RING(spectral)
    beta = RING(spec.beta)
    eps = spec.epsilon
    return (
        build_superperm(spec, i, j, n).scale(u * (u + beta))
        + identity(spec, n).scale(-eps * (u + beta))
        + build_K(spec, i, j, n).scale(eps * u)
    )


def r_std(spec: AlgebraSpec, spectral: Any, i: int, j: int, n: int) -> GradedOperator:
    """``R(u) = P R-hat(u) = u(u+beta) 1 - eps (u+beta) P + u K`` on factors (i, j)."""
    u = RING(spectral)
    beta = RING(spec.beta)
    return (
        identity(spec, n).scale(u * (u + beta))
        + build_superperm(spec, i, j, n).scale(-spec.epsilon * (u + beta))
        + build_K(spec, i, j, n).scale(u)
    )


def r_twisted(spec: AlgebraSpec, spectral: Any, i: int, j: int, n: int) -> GradedOperator:
    sign = build_sign_op(spec, min(i, j), max(i, j), n)
    return sign @ r_std(spec, spectral, i, j, n) @ sign


def l_fund(spec: AlgebraSpec, spectral: Any) -> GradedOperator:
    """``u^2 L(u) = u^2 + u(beta + K~ - eps P) - eps beta P`` on two factors, K~ = K_21."""
    u = RING(spectral)
    beta = RING(spec.beta)
    eps = spec.epsilon
    p = build_superperm(spec, 1, 2, 2)
    k_tilde = build_K(spec, 2, 1, 2)
    one = identity(spec, 2)
    return (
        one.scale(u * u + u * beta)
        + (k_tilde - p.scale(eps)).scale(u)
        + p.scale(-eps * beta)
    )


def _check(name: str, left: GradedOperator, right: GradedOperator) -> IdentityCheck:
    witness = left.difference(right)
    if witness is not None:
        logger.info("%s failed at %s", name, witness["indices"])
    return IdentityCheck.from_witness(name, witness)


def verify_brauer_relations(rep: BrauerRep) -> SuiteReport:
    """Defining relations of B_n(omega) as exact matrix identities."""
    s, e, n = rep.s, rep.e, rep.n
    one = rep.one()
    checks: List[IdentityCheck] = []
    for i in range(n - 1):
        tag = i + 1
        checks.append(_check(f"s{tag}^2=1", s[i] @ s[i], one))
        checks.append(_check(f"e{tag}^2=omega*e{tag}", e[i] @ e[i], e[i].scale(rep.omega)))
        checks.append(_check(f"s{tag}e{tag}=e{tag}", s[i] @ e[i], e[i]))
        checks.append(_check(f"e{tag}s{tag}=e{tag}", e[i] @ s[i], e[i]))
    for i in range(n - 1):
        for j in range(i + 2, n - 1):
            a, b = i + 1, j + 1
            checks.append(_check(f"s{a}s{b}=s{b}s{a}", s[i] @ s[j], s[j] @ s[i]))
            checks.append(_check(f"e{a}e{b}=e{b}e{a}", e[i] @ e[j], e[j] @ e[i]))
            checks.append(_check(f"s{a}e{b}=e{b}s{a}", s[i] @ e[j], e[j] @ s[i]))
            checks.append(_check(f"e{a}s{b}=s{b}e{a}", e[i] @ s[j], s[j] @ e[i]))
    for i in range(n - 2):
        a, b = i + 1, i + 2
        si, sj, ei, ej = s[i], s[i + 1], e[i], e[i + 1]
        checks.append(_check(f"s{a}s{b}s{a}=s{b}s{a}s{b}", si @ sj @ si, sj @ si @ sj))
        checks.append(_check(f"e{a}e{b}e{a}=e{a}", ei @ ej @ ei, ei))
        checks.append(_check(f"e{b}e{a}e{b}=e{b}", ej @ ei @ ej, ej))
        checks.append(_check(f"s{a}e{b}e{a}=s{b}e{a}", si @ ej @ ei, sj @ ei))
        checks.append(_check(f"e{b}e{a}s{b}=e{b}s{a}", ej @ ei @ sj, ej @ si))
    return SuiteReport.from_checks("brauer", checks)


def verify_unitarity(rep: BrauerRep) -> SuiteReport:
    """``rho(u) rho(-u) = (u^2 - 1)(u^2 - beta^2) 1`` and ``rho(u) at u=0``."""
    beta = RING(rep.beta)
    checks: List[IdentityCheck] = []
    for i in range(1, rep.n):
        plus = rep.image(build_rho_hat(rep.spec, U, i))
        minus = rep.image(build_rho_hat(rep.spec, -U, i))
        target = rep.one().scale((U**2 - 1) * (U**2 - beta**2))
        checks.append(_check(f"unitarity:rho{i}", plus @ minus, target))
        at_zero = rep.image(build_rho_hat(rep.spec, 0, i))
        checks.append(_check(f"rho{i}(0)=-beta", at_zero, rep.one().scale(-beta)))
    if rep.n >= 3:
        lhs = (
            rep.image(build_rho_hat(rep.spec, U, 1))
            @ rep.image(build_rho_hat(rep.spec, U + V, 2))
            @ rep.image(build_rho_hat(rep.spec, V, 1))
        )
        rhs = (
            rep.image(build_rho_hat(rep.spec, V, 2))
            @ rep.image(build_rho_hat(rep.spec, U + V, 1))
            @ rep.image(build_rho_hat(rep.spec, U, 2))
        )
        checks.append(_check("ybe:rho", lhs, rhs))
    return SuiteReport.from_checks("unitarity", checks)


def verify_braid_ybe(spec: AlgebraSpec) -> IdentityCheck:
    lhs = r_hat(spec, U - V, 1, 2, 3) @ r_hat(spec, U, 2, 3, 3) @ r_hat(spec, V, 1, 2, 3)
    rhs = r_hat(spec, V, 2, 3, 3) @ r_hat(spec, U, 1, 2, 3) @ r_hat(spec, U - V, 2, 3, 3)
    return _check("ybe:braid", lhs, rhs)


def verify_graded_ybe(spec: AlgebraSpec, *, twisted: bool = False, drop_sign: bool = False) -> IdentityCheck:
    """``R12(u-v) S12 R13(u) S12 R23(v) = R23(v) S12 R13(u) S12 R12(u-v)``.

    ``drop_sign`` removes the first sign operator of the left-hand side and
    serves as a negative control.
    """
    build = r_twisted if twisted else r_std
    s12 = build_sign_op(spec, 1, 2, 3)
    r12 = build(spec, U - V, 1, 2, 3)
    r13u = build(spec, U, 1, 3, 3)
    r23 = build(spec, V, 2, 3, 3)
    first = r12 if drop_sign else r12 @ s12
    lhs = first @ r13u @ s12 @ r23
    rhs = r23 @ s12 @ r13u @ s12 @ r12
    name = "ybe:graded:twisted" if twisted else "ybe:graded"
    if drop_sign:
        name += ":drop-sign"
    return _check(name, lhs, rhs)


def verify_rll_defrep(spec: AlgebraSpec) -> IdentityCheck:
    """Graded RLL with ``u^2 L1(u) = S13 R13(u) S13`` and ``v^2 L2(v) = S23 R23(v) S23``."""
    s12 = build_sign_op(spec, 1, 2, 3)
    s13 = build_sign_op(spec, 1, 3, 3)
    s23 = build_sign_op(spec, 2, 3, 3)
    l1 = s13 @ r_std(spec, U, 1, 3, 3) @ s13
    l2 = s23 @ r_std(spec, V, 2, 3, 3) @ s23
    r12 = r_std(spec, U - V, 1, 2, 3)
    lhs = r12 @ l1 @ s12 @ l2 @ s12
    rhs = s12 @ l2 @ s12 @ l1 @ r12
    return _check("rll:defrep", lhs, rhs)


def decompose_r_hat(spec: AlgebraSpec, op: GradedOperator) -> Optional[Tuple[MultiPoly, MultiPoly, MultiPoly]]:
    """Coefficients ``(a, b, c)`` with ``op = a P + b 1 + c K`` by Gram projection.

    Returns ``None`` when ``op`` is not in the span or the span is degenerate.
    """
    n = op.n
    basis = [build_superperm(spec, 1, 2, n), identity(spec, n), build_K(spec, 1, 2, n)]
    dods = [b.matrix.to_dod() for b in basis]

    def pair(x: Dict, y: Dict) -> Any:
        total = RING.zero
        for i, row in x.items():
            other = y.get(i, {})
            for j, value in row.items():
                if j in other:
                    total += value * other[j]
        return total

    gram_rows = [[QQ_I.convert(pair(x, y).coeff(1)) for y in dods] for x in dods]
    gram = DomainMatrix(gram_rows, (3, 3), QQ_I)
    try:
        inverse = gram.inv().to_list()
    except Exception:
        return None
    target = op.matrix.to_dod()
    rhs = [pair(d, target) for d in dods]
    coeffs = tuple(
        sum((RING(inverse[r][c]) * rhs[c] for c in range(3)), RING.zero) for r in range(3)
    )
    rebuilt = basis[0].scale(coeffs[0]) + basis[1].scale(coeffs[1]) + basis[2].scale(coeffs[2])
    if rebuilt.difference(op) is not None:
        return None
    return coeffs  # type: ignore[return-value]


def verify_rmatrix_structure(spec: AlgebraSpec) -> List[IdentityCheck]:
    checks: List[IdentityCheck] = []
    beta = RING(spec.beta)
    eps = spec.epsilon
    coeffs = decompose_r_hat(spec, r_hat(spec, U, 1, 2, 2))
    expected = (U * (U + beta), -eps * (U + beta), eps * U)
    if coeffs is None or tuple(coeffs) != expected:
        checks.append(
            IdentityCheck.failed(
                "rhat:three-term",
                expected=", ".join(format_poly(c) for c in expected),
                actual="degenerate" if coeffs is None else ", ".join(format_poly(c) for c in coeffs),
            )
        )
    else:
        checks.append(IdentityCheck.passed("rhat:three-term"))
    for label, op in (("rstd", r_std(spec, U, 1, 2, 2)), ("rhat", r_hat(spec, U, 1, 2, 2))):
        if op.is_even():
            checks.append(IdentityCheck.passed(f"{label}:even"))
        else:
            checks.append(IdentityCheck.failed(f"{label}:even", expected="even", actual="odd entries"))
    s12 = build_sign_op(spec, 1, 2, 2)
    checks.append(_check("lfund:expansion", s12 @ r_std(spec, U, 1, 2, 2) @ s12, l_fund(spec, U)))
    return checks


def verify_ybe_suite(spec: AlgebraSpec) -> SuiteReport:
    checks = [
        verify_braid_ybe(spec),
        verify_graded_ybe(spec),
        verify_graded_ybe(spec, twisted=True),
    ]
    checks.extend(verify_rmatrix_structure(spec))
    return SuiteReport.from_checks("ybe", checks)


__all__ = [
    "BrauerElement",
    "BrauerRep",
    "build_rho_hat",
    "decompose_r_hat",
    "l_fund",
    "r_hat",
    "r_std",
    "r_twisted",
    "verify_braid_ybe",
    "verify_brauer_relations",
    "verify_graded_ybe",
    "verify_rll_defrep",
    "verify_rmatrix_structure",
    "verify_unitarity",
    "verify_ybe_suite",
]
