# -*- coding: utf-8 -*-
"""Graded tensor powers of the defining space and the P, K, sign operators.

Operators act on V^{(x)n}; a basis vector is an index tuple ``(a_1, ..., a_n)``
and the row of a matrix entry is its upper index tuple.  ``X_ij`` places the
first index pair of a two-site operator on factor ``i`` and the second on
factor ``j``; other factors carry Kronecker deltas.  Grading signs are never
hidden in the embedding; they appear only through explicit sign operators.
"""

from __future__ import annotations

import itertools
import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

from .algebra import AlgebraSpec
from .errors import ConfigurationError
from .report import IdentityCheck, SuiteReport
from .scalars import ONE, POLY, ZERO, Scalar, format_poly, format_scalar


logger = logging.getLogger(__name__)

Dod = Dict[int, Dict[int, Any]]


@lru_cache(maxsize=64)
def basis_tuples(dim: int, n: int) -> Tuple[Tuple[int, ...], ...]:
    return tuple(itertools.product(range(dim), repeat=n))


def encode(indices: Sequence[int], dim: int) -> int:
    pos = 0
    for a in indices:
        pos = pos * dim + a
    return pos


def _sgn(exponent: int) -> int:
    return -1 if exponent % 2 else 1


@dataclass(frozen=True)
class GradedOperator:
    """Sparse exact operator on ``n`` graded factors with polynomial entries."""

    spec: AlgebraSpec
    n: int
    matrix: DomainMatrix

    @classmethod
    def from_dod(cls, spec: AlgebraSpec, n: int, dod: Dod) -> "GradedOperator":
        size = spec.dim**n
        clean: Dod = {}
        for i, row in dod.items():
            kept = {j: POLY.convert(v) for j, v in row.items() if v}
            kept = {j: v for j, v in kept.items() if v}
            if kept:
                clean[i] = kept
        return cls(spec, n, DomainMatrix.from_dod(clean, (size, size), POLY))

    def _check(self, other: "GradedOperator") -> None:
        if self.n != other.n or self.spec.dim != other.spec.dim:
            raise ConfigurationError(
                f"operators on different tensor powers: {self.n} vs {other.n}"
            )

    def __matmul__(self, other: "GradedOperator") -> "GradedOperator":
        self._check(other)
        return GradedOperator(self.spec, self.n, self.matrix.matmul(other.matrix))

    def __add__(self, other: "GradedOperator") -> "GradedOperator":
        self._check(other)
        return GradedOperator(self.spec, self.n, self.matrix.add(other.matrix))

    def __sub__(self, other: "GradedOperator") -> "GradedOperator":
        self._check(other)
        return GradedOperator(self.spec, self.n, self.matrix.sub(other.matrix))

    def __neg__(self) -> "GradedOperator":
        return GradedOperator(self.spec, self.n, self.matrix.neg())

    def scale(self, c: Any) -> "GradedOperator":
        c = POLY.convert(c)
        if not c:
            return zero(self.spec, self.n)
        return GradedOperator(self.spec, self.n, self.matrix.scalarmul(c))

    def entry(self, row: Sequence[int], col: Sequence[int]) -> Any:
        dim = self.spec.dim
        dod = self.matrix.to_dod()
        return dod.get(encode(row, dim), {}).get(encode(col, dim), POLY.zero)

    def items(self) -> Iterable[Tuple[Tuple[int, ...], Tuple[int, ...], Any]]:
        tuples = basis_tuples(self.spec.dim, self.n)
        for i, row in sorted(self.matrix.to_dod().items()):
            for j, value in sorted(row.items()):
                if value:
                    yield tuples[i], tuples[j], value

    def is_zero(self) -> bool:
        return not any(True for _ in self.items())

    def is_even(self) -> bool:
        g = self.spec.grading
        return all(
            (sum(g[a] for a in row) + sum(g[a] for a in col)) % 2 == 0
            for row, col, _ in self.items()
        )

    def subs(self, **values: Any) -> "GradedOperator":
        from .scalars import evaluate_poly

        dod = {
            i: {j: evaluate_poly(v, **values) for j, v in row.items()}
            for i, row in self.matrix.to_dod().items()
        }
        return GradedOperator.from_dod(self.spec, self.n, dod)

    def difference(self, other: "GradedOperator") -> Optional[Dict[str, Any]]:
        """First differing entry as a witness, or ``None`` when equal."""
        self._check(other)
        diff = self.matrix.sub(other.matrix).to_dod()
        tuples = basis_tuples(self.spec.dim, self.n)
        for i in sorted(diff):
            for j in sorted(diff[i]):
                if diff[i][j]:
                    return {
                        "indices": [list(tuples[i]), list(tuples[j])],
                        "expected": format_poly(self._get(other, i, j)),
                        "actual": format_poly(self._get(self, i, j)),
                    }
        return None

    @staticmethod
    def _get(op: "GradedOperator", i: int, j: int) -> Any:
        return op.matrix.to_dod().get(i, {}).get(j, POLY.zero)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedOperator):
            return NotImplemented
        return self.n == other.n and self.difference(other) is None



def _check_factors(n: int, *factors: int) -> None:
    for f in factors:
        if not 1 <= f <= n:
            raise ConfigurationError(f"factor {f} out of range 1..{n}")
    if len(set(factors)) != len(factors):
        raise ConfigurationError(f"factors must be distinct: {factors}")


def zero(spec: AlgebraSpec, n: int) -> GradedOperator:
    return GradedOperator.from_dod(spec, n, {})


def identity(spec: AlgebraSpec, n: int) -> GradedOperator:
    size = spec.dim**n
    return GradedOperator.from_dod(spec, n, {i: {i: 1} for i in range(size)})


def build_sign_op(spec: AlgebraSpec, i: int, j: int, n: int) -> GradedOperator:
    """Diagonal ``(-)^{ij}`` with entries ``(-1)^{[a_i][a_j]}``."""
    _check_factors(n, i, j)
    g = spec.grading
    dod: Dod = {}
    for pos, t in enumerate(basis_tuples(spec.dim, n)):
        dod[pos] = {pos: _sgn(g[t[i - 1]] * g[t[j - 1]])}
    return GradedOperator.from_dod(spec, n, dod)


def build_parity_op(spec: AlgebraSpec, i: int, n: int) -> GradedOperator:
    """Diagonal ``(-)^i`` with entries ``(-1)^{[a_i]}``."""
    _check_factors(n, i)
    dod: Dod = {}
    for pos, t in enumerate(basis_tuples(spec.dim, n)):
        dod[pos] = {pos: _sgn(spec.grading[t[i - 1]])}
    return GradedOperator.from_dod(spec, n, dod)


def build_superperm(spec: AlgebraSpec, i: int, j: int, n: int) -> GradedOperator:
    """``P_ij`` with entries ``(-1)^{[a_i][a_j]} d^{a_i}_{b_j} d^{a_j}_{b_i}``."""
    _check_factors(n, i, j)
    g, dim = spec.grading, spec.dim
    dod: Dod = {}
    for pos, t in enumerate(basis_tuples(dim, n)):
        col = list(t)
        col[i - 1], col[j - 1] = t[j - 1], t[i - 1]
        dod[pos] = {encode(col, dim): _sgn(g[t[i - 1]] * g[t[j - 1]])}
    return GradedOperator.from_dod(spec, n, dod)


def build_K(spec: AlgebraSpec, i: int, j: int, n: int) -> GradedOperator:
    """``K_ij`` with entries ``eps-bar^{a_i a_j} eps_{b_i b_j}``."""
    _check_factors(n, i, j)
    dim = spec.dim
    pairs = [(c, d, spec.eps(c, d)) for c in range(dim) for d in range(dim) if spec.eps(c, d)]
    dod: Dod = {}
    for pos, t in enumerate(basis_tuples(dim, n)):
        upper = spec.eps_bar(t[i - 1], t[j - 1])
        if not upper:
            continue
        row: Dict[int, Any] = {}
        for c, d, lower in pairs:
            col = list(t)
            col[i - 1], col[j - 1] = c, d
            row[encode(col, dim)] = upper * lower
        dod[pos] = row
    return GradedOperator.from_dod(spec, n, dod)


def split_casimir(spec: AlgebraSpec, i: int, j: int, n: int) -> GradedOperator:
    """``G_ij = K_ij - eps P_ij``."""
    return build_K(spec, i, j, n) - build_superperm(spec, i, j, n).scale(spec.epsilon)


def supertrace(op: GradedOperator, factor: int) -> GradedOperator:
    """Contract factor ``factor`` with weight ``(-1)^{[a]}``."""
    n, spec = op.n, op.spec
    _check_factors(n, factor)
    dim = spec.dim
    k = factor - 1
    dod: Dod = {}
    for row, col, value in op.items():
        if row[k] != col[k]:
            continue
        r = encode(row[:k] + row[k + 1 :], dim)
        c = encode(col[:k] + col[k + 1 :], dim)
        term = value * _sgn(spec.grading[row[k]])
        slot = dod.setdefault(r, {})
        slot[c] = slot.get(c, POLY.zero) + term
    return GradedOperator.from_dod(spec, n - 1, dod)


def lower_index(spec: AlgebraSpec, vector: Sequence[Scalar]) -> List[Scalar]:
    """``v_a = eps_ab v^b``."""
    return [sum((spec.eps(a, b) * vector[b] for b in range(spec.dim)), ZERO) for a in range(spec.dim)]


def raise_index(spec: AlgebraSpec, covector: Sequence[Scalar]) -> List[Scalar]:
    """``v^a = eps-bar^{ab} v_b``."""
    return [
        sum((spec.eps_bar(a, b) * covector[b] for b in range(spec.dim)), ZERO)
        for a in range(spec.dim)
    ]


def check_trace_identities(spec: AlgebraSpec) -> List[IdentityCheck]:
    """Partial supertraces ``str_2 P_12 = 1``, ``str_2 K_12 = eps`` and lowering against raising."""
    one = identity(spec, 1)
    checks = [
        IdentityCheck.from_witness("str_2 P_12=1", supertrace(build_superperm(spec, 1, 2, 2), 2).difference(one)),
        IdentityCheck.from_witness(
            "str_2 K_12=eps", supertrace(build_K(spec, 1, 2, 2), 2).difference(one.scale(spec.epsilon))
        ),
    ]
    witness = None
    for c in range(spec.dim):
        unit = [ONE if a == c else ZERO for a in range(spec.dim)]
        back = raise_index(spec, lower_index(spec, unit))
        if back != unit:
            witness = {
                "indices": [c],
                "expected": ", ".join(format_scalar(v) for v in unit),
                "actual": ", ".join(format_scalar(v) for v in back),
            }
            break
    checks.append(IdentityCheck.from_witness("raise(lower(v))=v", witness))
    return checks


# -- osp generators in the defining representation ---------------------------------


def defrep_generator(spec: AlgebraSpec, f: int, g: int) -> DomainMatrix:
    """``(G^f_g)^a_c = eps-bar^{fa} eps_{gc} - eps (-1)^{[c][a]} d^f_c d^a_g``."""
    dim = spec.dim
    dod: Dod = {}
    for a in range(dim):
        for c in range(dim):
            value = spec.eps_bar(f, a) * spec.eps(g, c)
            if f == c and a == g:
                value -= QQ_I.convert(spec.epsilon * _sgn(spec.grading[c] * spec.grading[a]))
            if value:
                dod.setdefault(a, {})[c] = value
    return DomainMatrix.from_dod(dod, (dim, dim), QQ_I)


def build_defrep_generators(spec: AlgebraSpec) -> Dict[Tuple[int, int], DomainMatrix]:
    """The two-index family ``G^f_g`` of D x D matrices, i.e. ``K - eps P`` read per (f, g)."""
    return {(f, g): defrep_generator(spec, f, g) for f in range(spec.dim) for g in range(spec.dim)}


def matrix_supertrace(spec: AlgebraSpec, m: DomainMatrix) -> Scalar:
    dod = m.to_dod()
    return sum(
        (dod.get(a, {}).get(a, ZERO) * _sgn(spec.grading[a]) for a in range(spec.dim)),
        ZERO,
    )


def supercommutator(spec: AlgebraSpec, key1: Tuple[int, int], key2: Tuple[int, int], gens: Dict) -> DomainMatrix:
    g = spec.grading
    a, b = gens[key1], gens[key2]
    sign = _sgn((g[key1[0]] + g[key1[1]]) * (g[key2[0]] + g[key2[1]]))
    second = b.matmul(a)
    if sign < 0:
        return a.matmul(b).add(second)
    return a.matmul(b).sub(second)


def check_generator_closure(spec: AlgebraSpec) -> List[Dict[str, Any]]:
    """Supercommutators of the basis must stay in its span; returns witnesses."""
    gens = build_defrep_generators(spec)
    dim = spec.dim
    keys = sorted(gens)
    rows = []
    for key in keys:
        dod = gens[key].to_dod()
        rows.append([dod.get(a, {}).get(c, ZERO) for a in range(dim) for c in range(dim)])
    basis = DomainMatrix(rows, (len(rows), dim * dim), QQ_I)
    echelon, pivots = basis.rref()
    echelon_rows = echelon.to_list()[: len(pivots)]

    witnesses: List[Dict[str, Any]] = []
    for k1 in keys:
        for k2 in keys:
            dod = supercommutator(spec, k1, k2, gens).to_dod()
            vec = [dod.get(a, {}).get(c, ZERO) for a in range(dim) for c in range(dim)]
            for row, p in zip(echelon_rows, pivots):
                coeff = vec[p]
                if coeff:
                    vec = [v - coeff * r for v, r in zip(vec, row)]
            if any(vec):
                witnesses.append(
                    {
                        "identity": "closure",
                        "indices": [list(k1), list(k2)],
                        "expected": "in span",
                        "actual": "outside span",
                    }
                )
                return witnesses
    return witnesses


# -- operator words ------------------------------------------------------------------

_TOKEN = re.compile(r"^([PKSG])(\d)(\d)?$")


def _coefficient(spec: AlgebraSpec, name: str) -> int:
    table = {"eps": spec.epsilon, "omega": spec.omega}
    if name in table:
        return table[name]
    try:
        return int(name)
    except ValueError as exc:
        raise ConfigurationError(f"unknown coefficient: {name}") from exc


class OperatorWords:
    """Builds products of P, K, S, G tokens on a fixed tensor power, with caching."""

    def __init__(self, spec: AlgebraSpec, n: int) -> None:
        self.spec = spec
        self.n = n
        self._cache: Dict[str, GradedOperator] = {}

    def token(self, text: str) -> GradedOperator:
        if text in self._cache:
            return self._cache[text]
        if text == "1":
            op = identity(self.spec, self.n)
        else:
            match = _TOKEN.match(text)
            if not match:
                raise ConfigurationError(f"unknown operator token: {text}")
            kind, i, j = match.group(1), int(match.group(2)), match.group(3)
            if j is None:
                if kind != "S":
                    raise ConfigurationError(f"token {text} needs two factors")
                op = build_parity_op(self.spec, i, self.n)
            else:
                builder = {
                    "P": build_superperm,
                    "K": build_K,
                    "S": build_sign_op,
                    "G": split_casimir,
                }[kind]
                op = builder(self.spec, i, int(j), self.n)
        self._cache[text] = op
        return op

    def word(self, text: str) -> GradedOperator:
        tokens = text.split()
        result = self.token(tokens[0])
        for tok in tokens[1:]:
            result = result @ self.token(tok)
        return result

    def expression(self, text: str) -> GradedOperator:
        """Evaluate ``"eps*K12 P31 - K12 S12 + omega*K12"``; ``"0"`` is the zero operator."""
        total = zero(self.spec, self.n)
        text = text.strip()
        if text == "0":
            return total
        sign = 1
        current: List[str] = []
        for tok in text.split() + ["+"]:
            if tok in ("+", "-"):
                if current:
                    coef = 1
                    if "*" in current[0]:
                        head, first = current[0].split("*", 1)
                        coef = _coefficient(self.spec, head)
                        current[0] = first
                    total = total + self.word(" ".join(current)).scale(sign * coef)
                current = []
                sign = 1 if tok == "+" else -1
            else:
                current.append(tok)
        return total


PK_IDENTITIES: Tuple[Tuple[str, str, str], ...] = (
    ("P12=P21", "P12", "P21"),
    ("K12=S12K21S12", "K12", "S12 K21 S12"),
    ("S1K12=S2K12", "S1 K12", "S2 K12"),
    ("K12S1=K12S2", "K12 S1", "K12 S2"),
    ("ident00:PP", "P12 P12", "1"),
    ("ident00:KK", "K12 K12", "omega*K12"),
    ("ident00:KP", "K12 P12", "eps*K12"),
    ("ident00:PK", "P12 K12", "eps*K12"),
    ("ident16a:1", "S1 P12", "P12 S2"),
    ("ident16a:2", "S23 P13", "P13 S12"),
    ("ident16a:3", "P13 S23", "S12 P13"),
    ("ident16:1", "P12 P23", "S12 P13 S12 P12"),
    ("ident16:2", "P12 P23", "P23 S23 P13 S23"),
    ("ident16:3", "P12 P23", "P23 S12 P13 S12"),
    ("ident16:4", "P12 K13", "S12 K23 S12 P12"),
    ("ident16:5", "K23 P12", "P12 S12 K13 S12"),
    ("ident15a:1", "eps*K12 P31", "K12 S12 K32 S12"),
    ("ident15a:2", "eps*P31 K12", "S12 K32 S12 K12"),
    ("ident15b:1", "K23 K12", "eps*K23 S12 P13 S12"),
    ("ident15b:2", "K23 K12", "eps*S23 P13 S23 K12"),
    ("ident15:1", "K31 K12", "eps*S12 P32 S12 K12"),
    ("ident15:2", "K31 K12", "eps*K31 S13 P32 S13"),
    ("ident01", "P12 P23 P12", "P23 P12 P23"),
    ("ident02:1", "K12 K23 K12", "K12"),
    ("ident02:2", "K23 K12 K23", "K23"),
    ("ident05:1", "P12 K23 K12", "P23 K12"),
    ("ident05:2", "K12 K23 P12", "K12 P23"),
    ("ident03:1", "P23 K12 K23", "P12 K23"),
    ("ident03:2", "K23 K12 P23", "K23 P12"),
    ("ident12:1", "K12 P23 K12", "eps*K12"),
    ("ident12:2", "K23 P12 K23", "eps*K23"),
    ("ident11", "P12 K23 P12", "P23 K12 P23"),
    ("ident04:1", "P12 P23 K12", "K23 P12 P23"),
    ("ident04:2", "K12 P23 P12", "P23 P12 K23"),
)

_G13 = "S12 G13 S12"

OSP_IDENTITIES: Tuple[Tuple[str, str, str], ...] = (
    ("osp06d", f"{_G13} G23 - G23 {_G13} + G12 G23 - G23 G12", "0"),
    (
        "osp06a",
        f"{_G13} G23 - G23 {_G13}",
        "eps*P12 G23 - K12 G23 - eps*G23 P12 + G23 K12",
    ),
    (
        "osp10",
        f"{_G13} G23 - G23 {_G13}",
        f"eps*P12 {_G13} - K12 {_G13} - eps*{_G13} P12 + {_G13} K12",
    ),
    ("osp08:left", f"K12 {_G13} + K12 G23", "0"),
    ("osp08:right", f"{_G13} K12 + G23 K12", "0"),
    ("osp08b:left", "K12 G31 + K12 S12 G32 S12", "0"),
    ("osp08b:right", "G31 K12 + S12 G32 S12 K12", "0"),
    ("osp09:1", f"P12 {_G13}", "G23 P12"),
    ("osp09:2", f"{_G13} P12", "P12 G23"),
)


def check_word_identities(
    spec: AlgebraSpec,
    identities: Sequence[Tuple[str, str, str]],
    n: int = 3,
) -> List[IdentityCheck]:
    words = OperatorWords(spec, n)
    checks: List[IdentityCheck] = []
    for name, lhs, rhs in identities:
        left = words.expression(lhs)
        right = words.expression(rhs)
        witness = left.difference(right)
        checks.append(IdentityCheck.from_witness(name, witness))
        logger.debug("%s on %s: %s", name, spec.name, "ok" if witness is None else "FAILED")
    return checks


def verify_pk_identities(spec: AlgebraSpec, n: int = 3) -> SuiteReport:
    """The P/K identity family as exact matrix equalities on V^{(x)3}."""
    checks = check_word_identities(spec, PK_IDENTITIES, n)
    checks.extend(check_trace_identities(spec))
    return SuiteReport.from_checks("pk_identities", checks)


def verify_osp_defrep(spec: AlgebraSpec) -> SuiteReport:
    """osp relations of the split Casimir, closure and tracelessness of its basis."""
    checks = check_word_identities(spec, OSP_IDENTITIES, 3)
    closure = check_generator_closure(spec)
    checks.append(IdentityCheck.from_witness("closure", closure[0] if closure else None))
    gens = build_defrep_generators(spec)
    bad = [key for key, m in sorted(gens.items()) if matrix_supertrace(spec, m)]
    checks.append(
        IdentityCheck.from_witness(
            "supertrace(G)=0",
            None
            if not bad
            else {"indices": list(bad[0]), "expected": "0", "actual": "nonzero"},
        )
    )
    return SuiteReport.from_checks("osp_defrep", checks)


__all__ = [
    "GradedOperator",
    "OSP_IDENTITIES",
    "OperatorWords",
    "PK_IDENTITIES",
    "basis_tuples",
    "build_K",
    "build_defrep_generators",
    "build_parity_op",
    "build_sign_op",
    "build_superperm",
    "check_generator_closure",
    "check_trace_identities",
    "check_word_identities",
    "defrep_generator",
    "encode",
    "identity",
    "lower_index",
    "matrix_supertrace",
    "raise_index",
    "split_casimir",
    "supertrace",
    "verify_osp_defrep",
    "verify_pk_identities",
    "zero",
]
