# -*- coding: utf-8 -*-
"""Normal ordering in the super-oscillator algebra and its graded tensor square.

Generators are letters ``(factor, a)``; a word is normal when its letters are
non-decreasing in that order, so factor-1 letters precede factor-2 letters and
within a factor x^j < d^j < b^alpha follows the index layout.  Products are
rewritten with

* ``c^p c^l -> eps-bar^{pl} - eps (-1)^{[p][l]} c^l c^p`` for ``p > l`` in one factor,
* ``c_2^p c_1^l -> -eps (-1)^{[p][l]} c_1^l c_2^p`` across factors,
* ``(1 + eps (-1)^{[a]}) (c^a)^2 = eps-bar^{aa}``, which either turns a square
  into a scalar or leaves it as an irreducible letter pair.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

from .algebra import AlgebraSpec
from .brauer import r_std
from .errors import OracleError, SpecError
from .graded import build_defrep_generators, encode
from .report import IdentityCheck, SuiteReport
from .scalars import (
    I_UNIT,
    OMEGA,
    ONE,
    RING,
    U,
    V,
    Z,
    ZERO,
    MultiPoly,
    Scalar,
    conjugate_poly,
    format_poly,
    format_scalar,
    gaussian,
)


logger = logging.getLogger(__name__)

Letter = Tuple[int, int]
Word = Tuple[Letter, ...]


def _sgn(exponent: int) -> int:
    return -1 if exponent % 2 else 1


class OscAlgebra:
    """The algebra ``c^a c^b + eps (-1)^{[a][b]} c^b c^a = eps-bar^{ab}`` on two factors."""

    def __init__(self, spec: AlgebraSpec, sigma: Scalar = I_UNIT, oracle_max: int = 6) -> None:
        self.spec = spec
        self.sigma = QQ_I.convert(sigma)
        self.oracle_max = oracle_max
        self._squares: Dict[int, Optional[Scalar]] = {a: self._square(a) for a in range(spec.dim)}
        self._insert_cache: Dict[Tuple[Word, Letter], Dict[Word, Scalar]] = {}
        self._sym_cache: Dict[Word, "OscElement"] = {}
        self._invariants: Dict[int, "OscElement"] = {}

    def _square(self, a: int) -> Optional[Scalar]:
        kappa = 1 + self.spec.epsilon * _sgn(self.spec.grading[a])
        diag = self.spec.eps_bar(a, a)
        if kappa == 0:
            if diag:
                raise SpecError(
                    f"relation inconsistency: (c^{a})^2 has zero weight but eps-bar^{{{a}{a}}} = {format_scalar(diag)}"
                )
            return None
        return QQ_I.convert(diag) / kappa

    def parity(self, letter: Letter) -> int:
        return self.spec.grading[letter[1]]

    def word_parity(self, word: Word) -> int:
        return sum(self.spec.grading[a] for _, a in word) % 2

    # -- rewriting -------------------------------------------------------------------

    def insert(self, word: Word, letter: Letter) -> Dict[Word, Scalar]:
        """Normal form of ``word * letter`` for a normal ``word``."""
        key = (word, letter)
        cached = self._insert_cache.get(key)
        if cached is not None:
            return cached
        result: Dict[Word, Scalar] = {}
        if not word or word[-1] < letter:
            result[word + (letter,)] = ONE
        elif word[-1] == letter:
            square = self._squares[letter[1]]
            if square is None:
                result[word + (letter,)] = ONE
            elif square:
                result[word[:-1]] = square
        else:
            last, head = word[-1], word[:-1]
            g = self.spec.grading
            if last[0] == letter[0]:
                contraction = self.spec.eps_bar(last[1], letter[1])
                if contraction:
                    result[head] = QQ_I.convert(contraction)
            factor = QQ_I.convert(-self.spec.epsilon * _sgn(g[last[1]] * g[letter[1]]))
            for w1, c1 in self.insert(head, letter).items():
                for w2, c2 in self.insert(w1, last).items():
                    result[w2] = result.get(w2, ZERO) + factor * c1 * c2
            result = {w: c for w, c in result.items() if c}
        self._insert_cache[key] = result
        return result

    def multiply_words(self, left: Word, right: Word) -> Dict[Word, Scalar]:
        current: Dict[Word, Scalar] = {left: ONE}
        for letter in right:
            nxt: Dict[Word, Scalar] = {}
            for word, coeff in current.items():
                for w, c in self.insert(word, letter).items():
                    nxt[w] = nxt.get(w, ZERO) + coeff * c
            current = {w: c for w, c in nxt.items() if c}
        return current

    def normal_form(self, letters: Sequence[Letter]) -> "OscElement":
        terms = self.multiply_words((), tuple(letters))
        return OscElement(self, {w: RING(c) for w, c in terms.items()})

    # -- constructors ----------------------------------------------------------------

    def element(self, terms: Dict[Word, Any]) -> "OscElement":
        clean = {w: RING(c) for w, c in terms.items()}
        return OscElement(self, {w: c for w, c in clean.items() if c})

    def zero(self) -> "OscElement":
        return OscElement(self, {})

    def one(self) -> "OscElement":
        return self.scalar(1)

    def scalar(self, value: Any) -> "OscElement":
        return self.element({(): value})

    def gen(self, a: int, factor: int = 1) -> "OscElement":
        return self.element({((factor, a),): 1})

    def lowered(self, a: int, factor: int = 1) -> "OscElement":
        """``c_a = eps_ab c^b``."""
        return self.element({((factor, b),): value for b, value in self.spec.lowering_partners(a)})

    def c_pm(self, b: int, sign: int) -> "OscElement":
        """``c_+-^b = c_1^b +- sigma c_2^b``."""
        return self.gen(b, 1) + self.gen(b, 2).scale(sign * self.sigma)

    def z(self) -> "OscElement":
        """``z = sigma eps_ab c_1^a c_2^b``."""
        return self.invariant(1).scale(self.sigma)

    # -- symmetrized products --------------------------------------------------------

    def swap_factor(self, x: Letter, y: Letter) -> Scalar:
        """Weight picked up when two neighbouring entries of a symmetrized product swap."""
        return QQ_I.convert(-self.spec.epsilon * _sgn(self.parity(x) * self.parity(y)))

    def swap_sign(self, letters: Sequence[Letter], i: int, j: int) -> Scalar:
        """Weight for exchanging entries ``i < j`` (0-based, not necessarily adjacent)."""
        if i > j:
            i, j = j, i
        pi, pj = self.parity(letters[i]), self.parity(letters[j])
        exponent = pi * pj + sum((pi + pj) * self.parity(letters[k]) for k in range(i + 1, j))
        return QQ_I.convert(-self.spec.epsilon * _sgn(exponent))

    def canonical_order(self, letters: Sequence[Letter]) -> Tuple[Word, Scalar]:
        """Sort entries of a symmetrized product, tracking the graded weight."""
        items = list(letters)
        weight = ONE
        for end in range(len(items) - 1, 0, -1):
            for k in range(end):
                if items[k] > items[k + 1]:
                    weight *= self.swap_factor(items[k], items[k + 1])
                    items[k], items[k + 1] = items[k + 1], items[k]
        return tuple(items), weight

    def _apply_s(self, raw: Dict[Word, Scalar], j: int) -> Dict[Word, Scalar]:
        out: Dict[Word, Scalar] = {}
        for word, coeff in raw.items():
            x, y = word[j - 1], word[j]
            swapped = word[: j - 1] + (y, x) + word[j + 1 :]
            weight = QQ_I.convert(self.spec.epsilon * _sgn(self.parity(x) * self.parity(y)))
            out[swapped] = out.get(swapped, ZERO) + coeff * weight
        return out

    def antisymmetrize_factorized(self, letters: Sequence[Letter]) -> Dict[Word, Scalar]:
        """``A_k`` as the product of ``1 - s_j + s_{j-1} s_j - ...`` factors, unnormalized."""
        raw: Dict[Word, Scalar] = {tuple(letters): ONE}
        for j in range(1, len(letters)):
            acc = dict(raw)
            current = raw
            for i in range(1, j + 1):
                current = self._apply_s(current, j - i + 1)
                sign = -1 if i % 2 else 1
                for word, coeff in current.items():
                    acc[word] = acc.get(word, ZERO) + sign * coeff
            raw = {w: c for w, c in acc.items() if c}
        return raw

    def antisymmetrize_oracle(self, letters: Sequence[Letter]) -> Dict[Word, Scalar]:
        """Alternating sum over all permutations, one weight per inverted pair."""
        k = len(letters)
        raw: Dict[Word, Scalar] = {}
        for perm in itertools.permutations(range(k)):
            position = {p: idx for idx, p in enumerate(perm)}
            weight = ONE
            for p in range(k):
                for q in range(p + 1, k):
                    if position[p] > position[q]:
                        weight *= self.swap_factor(letters[p], letters[q])
            word = tuple(letters[p] for p in perm)
            raw[word] = raw.get(word, ZERO) + weight
        return {w: c for w, c in raw.items() if c}

    def supersym_product(self, indices: Sequence[int], factor: int = 1) -> "OscElement":
        """``c^{(a_1} ... c^{a_k)}`` on one factor, cross-checked against the permutation sum."""
        letters = tuple((factor, a) for a in indices)
        ordered, weight = self.canonical_order(letters)
        cached = self._sym_cache.get(ordered)
        if cached is None:
            cached = self._supersym_uncached(ordered)
            self._sym_cache[ordered] = cached
        return cached.scale(weight)

    def _supersym_uncached(self, letters: Word) -> "OscElement":
        k = len(letters)
        factorized = self.antisymmetrize_factorized(letters)
        norm = QQ_I.convert(gaussian(1) / math.factorial(k))
        result = self._from_raw(factorized).scale(norm)
        if k > self.oracle_max:
            return result
        oracle = self.antisymmetrize_oracle(letters)
        if factorized != oracle:
            check = self._from_raw(oracle).scale(norm)
            if (result - check).terms:
                raise OracleError(
                    f"symmetrizer constructions disagree for {[a for _, a in letters]}"
                )
        return result

    def _from_raw(self, raw: Dict[Word, Scalar]) -> "OscElement":
        total: Dict[Word, Scalar] = {}
        for word, coeff in raw.items():
            for w, c in self.multiply_words((), word).items():
                total[w] = total.get(w, ZERO) + coeff * c
        return self.element({w: c for w, c in total.items() if c})

    # -- invariants ------------------------------------------------------------------

    def metric_pairs(self) -> List[Tuple[int, int, Scalar]]:
        dim = self.spec.dim
        return [(a, b, self.spec.eps(a, b)) for a in range(dim) for b in range(dim) if self.spec.eps(a, b)]

    def invariant(self, k: int) -> "OscElement":
        """``I_k = eps_{a_1 b_1} ... eps_{a_k b_k} c_1^{(a_1..a_k)} c_2^{(b_k..b_1)}``."""
        if k in self._invariants:
            return self._invariants[k]
        if k == 0:
            result = self.one()
        else:
            pairs = self.metric_pairs()
            result = self.zero()
            for combo in itertools.combinations_with_replacement(range(len(pairs)), k):
                mult = math.prod(math.factorial(combo.count(i)) for i in set(combo))
                weight = QQ_I.convert(gaussian(math.factorial(k)) / mult)
                for i in combo:
                    weight *= pairs[i][2]
                upper = [pairs[i][0] for i in combo]
                lower = [pairs[i][1] for i in reversed(combo)]
                term = self.supersym_product(upper, 1) * self.supersym_product(lower, 2)
                result = result + term.scale(weight)
        self._invariants[k] = result
        logger.debug("I_%d on %s: %d terms", k, self.spec.name, len(result.terms))
        return result

    def invariant_tilde(self, k: int) -> "OscElement":
        return self.invariant(k).scale(self.sigma**k)

    def evaluate_in_z(self, poly: MultiPoly) -> "OscElement":
        """Substitute the element ``z`` into a polynomial of ``Z`` with scalar coefficients."""
        z = self.z()
        degree = poly.degree(Z) if poly else 0
        result = self.zero()
        for j in range(max(degree, 0), -1, -1):
            coeff = poly.coeff_wrt(Z, j)
            result = result * z + self.scalar(coeff)
        return result


@dataclass(eq=False)
class OscElement:
    """Element of the oscillator algebra with normal words and polynomial coefficients."""

    algebra: OscAlgebra
    terms: Dict[Word, MultiPoly] = field(default_factory=dict)

    def _coerce(self, other: Any) -> "OscElement":
        if isinstance(other, OscElement):
            return other
        return self.algebra.scalar(other)

    def __add__(self, other: Any) -> "OscElement":
        other = self._coerce(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, RING.zero) + c
        return OscElement(self.algebra, {w: c for w, c in terms.items() if c})

    __radd__ = __add__

    def __neg__(self) -> "OscElement":
        return OscElement(self.algebra, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: Any) -> "OscElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "OscElement":
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> "OscElement":
        if not isinstance(other, OscElement):
            return self.scale(other)
        alg = self.algebra
        terms: Dict[Word, MultiPoly] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                coeff = c1 * c2
                for w, c in alg.multiply_words(w1, w2).items():
                    terms[w] = terms.get(w, RING.zero) + coeff * c
        return OscElement(alg, {w: c for w, c in terms.items() if c})

    def __rmul__(self, other: Any) -> "OscElement":
        return self.scale(other)

    def scale(self, c: Any) -> "OscElement":
        c = RING(c)
        if not c:
            return OscElement(self.algebra, {})
        return OscElement(self.algebra, {w: v * c for w, v in self.terms.items() if v * c})

    def __pow__(self, k: int) -> "OscElement":
        result = self.algebra.one()
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, OscElement):
            return not (self - other).terms
        if isinstance(other, (int,)):
            return not (self - self.algebra.scalar(other)).terms
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, word: Word) -> MultiPoly:
        return self.terms.get(word, RING.zero)

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def parity(self) -> Optional[int]:
        parities = {self.algebra.word_parity(w) for w in self.terms}
        if len(parities) > 1:
            return None
        return parities.pop() if parities else 0

    def subs(self, **values: Any) -> "OscElement":
        from .scalars import evaluate_poly

        return self.algebra.element({w: evaluate_poly(c, **values) for w, c in self.terms.items()})

    def describe(self, limit: int = 6) -> str:
        parts = []
        for word, coeff in sorted(self.terms.items())[:limit]:
            letters = " ".join(f"c{f}^{a}" for f, a in word) or "1"
            parts.append(f"({format_poly(coeff)})*{letters}")
        more = "" if len(self.terms) <= limit else f" + ...{len(self.terms) - limit} more"
        return (" + ".join(parts) or "0") + more


def commutator(x: OscElement, y: OscElement) -> OscElement:
    return x * y - y * x


def supercommutator(x: OscElement, y: OscElement, px: int, py: int) -> OscElement:
    return x * y - (y * x).scale(_sgn(px * py))


def z_polynomial(k: int, omega: Any = OMEGA) -> MultiPoly:
    """``p_{k+1} = z p_k + (k/4)(k - 1 - omega) p_{k-1}`` with ``p_0 = 1``, ``p_1 = z``."""
    omega = RING(omega)
    prev, cur = RING.one, Z
    if k == 0:
        return prev
    for j in range(1, k):
        prev, cur = cur, Z * cur + RING(gaussian(j) / 4) * (j - 1 - omega) * prev
    return cur


# -- F generators and L operator -------------------------------------------------------


@dataclass
class FGenerator:
    """``F^{ab} = eps (-1)^{[b]} c^{(a} c^{b)}`` and ``F^a_b = eps_bc F^{ac}`` on one factor."""

    factor: int
    upper: Dict[Tuple[int, int], OscElement]
    mixed: Dict[Tuple[int, int], OscElement]


def build_F(alg: OscAlgebra, factor: int = 1) -> FGenerator:
    spec = alg.spec
    dim = spec.dim
    upper: Dict[Tuple[int, int], OscElement] = {}
    for a in range(dim):
        for b in range(dim):
            sym = alg.supersym_product([a, b], factor)
            upper[(a, b)] = sym.scale(spec.epsilon * _sgn(spec.grading[b]))
    mixed: Dict[Tuple[int, int], OscElement] = {}
    for a in range(dim):
        for b in range(dim):
            total = alg.zero()
            for c, value in spec.lowering_partners(b):
                total = total + upper[(a, c)].scale(value)
            mixed[(a, b)] = total
    return FGenerator(factor=factor, upper=upper, mixed=mixed)


def build_B(alg: OscAlgebra, factor: int = 1) -> Dict[Tuple[int, int], OscElement]:
    """``B^a_b = eps (-1)^{[b]} c^a c_b``."""
    spec = alg.spec
    return {
        (a, b): (alg.gen(a, factor) * alg.lowered(b, factor)).scale(spec.epsilon * _sgn(spec.grading[b]))
        for a in range(spec.dim)
        for b in range(spec.dim)
    }


def build_L_osc(alg: OscAlgebra, spectral: Any, alpha: Any = None, factor: int = 1) -> Dict[Tuple[int, int], OscElement]:
    """``L^a_b(u) = (u + alpha - 1/2) delta^a_b + B^a_b``; ``alpha`` defaults to 1/2."""
    alpha = gaussian(1, 0) / 2 if alpha is None else QQ_I.convert(alpha)
    shift = RING(spectral) + RING(alpha - gaussian(1, 0) / 2)
    B = build_B(alg, factor)
    return {
        key: value + (alg.scalar(shift) if key[0] == key[1] else alg.zero())
        for key, value in B.items()
    }


# -- verification ----------------------------------------------------------------------


def _elem_check(name: str, left: OscElement, right: OscElement, indices: Iterable[Any] = ()) -> IdentityCheck:
    diff = left - right
    if diff.is_zero():
        return IdentityCheck.passed(name)
    return IdentityCheck.failed(
        name,
        indices=list(indices),
        expected=right.describe(),
        actual=left.describe(),
    )


def _first_failure(name: str, checks: List[IdentityCheck]) -> IdentityCheck:
    for check in checks:
        if check.status == "fail":
            return IdentityCheck(name=name, status="fail", witness=check.witness)
    return IdentityCheck.passed(name, note=f"{len(checks)} components")


def verify_contractions(alg: OscAlgebra) -> SuiteReport:
    spec = alg.spec
    checks: List[IdentityCheck] = []
    for factor in (1, 2):
        up_down = alg.zero()
        down_up = alg.zero()
        for a in range(spec.dim):
            up_down = up_down + alg.gen(a, factor) * alg.lowered(a, factor)
            down_up = down_up + alg.lowered(a, factor) * alg.gen(a, factor)
        checks.append(_elem_check(f"c{factor}^a c{factor}_a=omega/2", up_down, alg.scalar(gaussian(spec.omega) / 2)))
        checks.append(_elem_check(f"c{factor}_a c{factor}^a=D/2", down_up, alg.scalar(gaussian(spec.dim) / 2)))
    return SuiteReport.from_checks("contractions", checks)


def adjoint_matrix(alg: OscAlgebra, element: OscElement, parity: int, factor: int = 1) -> Optional[List[List[Scalar]]]:
    """Matrix ``M[e][d]`` with ``[element, c^d} = sum_e M[e][d] c^e``; ``None`` if not linear."""
    spec = alg.spec
    dim = spec.dim
    matrix = [[ZERO] * dim for _ in range(dim)]
    for d in range(dim):
        bracket = supercommutator(element, alg.gen(d, factor), parity, spec.grading[d])
        for word, coeff in bracket.terms.items():
            if len(word) != 1 or word[0][0] != factor or not coeff.is_ground:
                return None
            matrix[word[0][1]][d] = QQ_I.convert(coeff.coeff(1))
    return matrix


def _solve_in_span(columns: List[List[Scalar]], target: List[Scalar]) -> Optional[List[Scalar]]:
    rows = len(target)
    n = len(columns)
    aug = [[columns[j][i] for j in range(n)] + [target[i]] for i in range(rows)]
    echelon, pivots = DomainMatrix(aug, (rows, n + 1), QQ_I).rref()
    if n in pivots:
        return None
    data = echelon.to_list()
    solution = [ZERO] * n
    for r, p in enumerate(pivots):
        solution[p] = data[r][n]
    return solution


def _flatten(matrix: List[List[Scalar]]) -> List[Scalar]:
    return [v for row in matrix for v in row]


def verify_F_properties(alg: OscAlgebra) -> SuiteReport:
    """Tracelessness, graded antisymmetry, osp closure, the quadratic identity and C_2."""
    spec = alg.spec
    dim, g, eps, omega = spec.dim, spec.grading, spec.epsilon, spec.omega
    F = build_F(alg)
    checks: List[IdentityCheck] = []

    trace = alg.zero()
    for a in range(dim):
        trace = trace + F.mixed[(a, a)].scale(_sgn(g[a]))
    checks.append(_elem_check("str F=0", trace, alg.zero()))

    antisym = [
        _elem_check(
            "antisymmetry",
            F.upper[(b, a)],
            F.upper[(a, b)].scale(-eps * _sgn(g[a] + g[b] + g[a] * g[b])),
            [a, b],
        )
        for a in range(dim)
        for b in range(dim)
    ]
    checks.append(_first_failure("graded antisymmetry", antisym))

    keys = sorted(F.mixed)
    parity = {key: (g[key[0]] + g[key[1]]) % 2 for key in keys}
    ad = {key: adjoint_matrix(alg, F.mixed[key], parity[key]) for key in keys}
    if any(m is None for m in ad.values()):
        checks.append(IdentityCheck.failed("osp-commutators", expected="linear adjoint action", actual="nonlinear"))
    else:
        columns = [_flatten(ad[key]) for key in keys]  # type: ignore[arg-type]
        closure: List[IdentityCheck] = []
        for k1 in keys:
            for k2 in keys:
                m1 = DomainMatrix(ad[k1], (dim, dim), QQ_I)  # type: ignore[arg-type]
                m2 = DomainMatrix(ad[k2], (dim, dim), QQ_I)  # type: ignore[arg-type]
                sign = _sgn(parity[k1] * parity[k2])
                bracket = m1.matmul(m2).sub(m2.matmul(m1) if sign > 0 else m2.matmul(m1).neg())
                coeffs = _solve_in_span(columns, _flatten(bracket.to_list()))
                lhs = supercommutator(F.mixed[k1], F.mixed[k2], parity[k1], parity[k2])
                if coeffs is None:
                    closure.append(IdentityCheck.failed("osp-commutators", indices=[list(k1), list(k2)], expected="in span", actual="outside span"))
                    break
                rhs = alg.zero()
                for key, c in zip(keys, coeffs):
                    if c:
                        rhs = rhs + F.mixed[key].scale(c)
                closure.append(_elem_check("osp-commutators", lhs, rhs, [list(k1), list(k2)]))
        checks.append(_first_failure("osp-commutators", closure))
        checks.append(_adjoint_spans_defrep(spec, columns))

    square = {
        (a, c): sum((F.mixed[(a, b)] * F.mixed[(b, c)] for b in range(dim)), alg.zero())
        for a in range(dim)
        for c in range(dim)
    }
    casimir = sum((square[(a, a)].scale(_sgn(g[a])) for a in range(dim)), alg.zero())
    expected_c2 = gaussian(eps * omega * (omega - 1)) / 4
    checks.append(_elem_check("C2=eps*omega*(omega-1)/4", casimir, alg.scalar(expected_c2)))

    if omega == 0:
        logger.info("characteristic identity skipped for %s: omega = 0", spec.name)
        checks.append(IdentityCheck.skipped("characteristic identity", "omega = 0"))
    else:
        beta = RING(spec.beta)
        ratio = gaussian(eps) / omega
        char = []
        for a in range(dim):
            for c in range(dim):
                lhs = square[(a, c)] + F.mixed[(a, c)].scale(beta)
                if a == c:
                    lhs = lhs - casimir.scale(ratio)
                char.append(_elem_check("characteristic identity", lhs, alg.zero(), [a, c]))
        checks.append(_first_failure("characteristic identity", char))

    B = build_B(alg)
    half = alg.scalar(gaussian(1) / 2)
    consistency = [
        _elem_check("B=F+delta/2", B[key], F.mixed[key] + (half if key[0] == key[1] else alg.zero()), list(key))
        for key in keys
    ]
    checks.append(_first_failure("B=F+delta/2", consistency))
    return SuiteReport.from_checks("F_properties", checks)


def _adjoint_spans_defrep(spec: AlgebraSpec, columns: List[List[Scalar]]) -> IdentityCheck:
    gens = build_defrep_generators(spec)
    dim = spec.dim
    defrep = []
    for key in sorted(gens):
        dod = gens[key].to_dod()
        defrep.append([dod.get(a, {}).get(c, ZERO) for a in range(dim) for c in range(dim)])

    def rank(rows: List[List[Scalar]]) -> int:
        return len(DomainMatrix(rows, (len(rows), dim * dim), QQ_I).rref()[1])

    r_ad, r_def, r_both = rank(columns), rank(defrep), rank(columns + defrep)
    if r_ad == r_def == r_both:
        return IdentityCheck.passed("adjoint action spans osp", note=f"dim {r_def}")
    return IdentityCheck.failed(
        "adjoint action spans osp",
        expected=f"rank {r_def}",
        actual=f"ranks {r_ad}/{r_both}",
    )


def verify_rll_osc(alg: OscAlgebra) -> SuiteReport:
    """Component RLL with ``R(u - v)`` on V (x) V and two oscillator L-operators."""
    spec = alg.spec
    dim, g = spec.dim, spec.grading
    r_dod = r_std(spec, U - V, 1, 2, 2).matrix.to_dod()
    Lu = build_L_osc(alg, U)
    Lv = build_L_osc(alg, V)

    def r_entry(a1: int, a2: int, b1: int, b2: int) -> MultiPoly:
        return r_dod.get(encode((a1, a2), dim), {}).get(encode((b1, b2), dim), RING.zero)

    lhs_prod: Dict[Tuple[int, int, int, int], OscElement] = {}
    rhs_prod: Dict[Tuple[int, int, int, int], OscElement] = {}
    checks: List[IdentityCheck] = []
    for a1, a2, c1, c2 in itertools.product(range(dim), repeat=4):
        lhs = alg.zero()
        rhs = alg.zero()
        for b1, b2 in itertools.product(range(dim), repeat=2):
            r_left = r_entry(a1, a2, b1, b2)
            if r_left:
                key = (b1, c1, b2, c2)
                if key not in lhs_prod:
                    lhs_prod[key] = Lu[(b1, c1)] * Lv[(b2, c2)]
                sign = _sgn(g[c1] * (g[b2] + g[c2]))
                lhs = lhs + lhs_prod[key].scale(r_left * sign)
            r_right = r_entry(b1, b2, c1, c2)
            if r_right:
                key = (a2, b2, a1, b1)
                if key not in rhs_prod:
                    rhs_prod[key] = Lv[(a2, b2)] * Lu[(a1, b1)]
                sign = _sgn(g[a1] * (g[a2] + g[b2]))
                rhs = rhs + rhs_prod[key].scale(r_right * sign)
        checks.append(_elem_check("rll:osc", lhs, rhs, [a1, a2, c1, c2]))
    logger.info("oscillator RLL on %s: %d components", spec.name, len(checks))
    return SuiteReport.from_checks("rll_osc", [_first_failure("rll:osc", checks)])


def verify_invariance(
    alg: OscAlgebra, k: int, generators: Optional[Tuple[FGenerator, FGenerator]] = None
) -> IdentityCheck:
    """``[I_k, F_1^{ab} + F_2^{ab}] = 0`` for all index pairs."""
    F1, F2 = generators or (build_F(alg, 1), build_F(alg, 2))
    inv = alg.invariant(k)
    checks = [
        _elem_check(f"invariance:I{k}", commutator(inv, F1.upper[key] + F2.upper[key]), alg.zero(), list(key))
        for key in sorted(F1.upper)
    ]
    return _first_failure(f"invariance:I{k}", checks)


def verify_recurrence(alg: OscAlgebra, k: int) -> IdentityCheck:
    """``I_k I_1 = I_{k+1} + (k/4)((k-1) - omega) I_{k-1}``."""
    omega = alg.spec.omega
    lhs = alg.invariant(k) * alg.invariant(1)
    rhs = alg.invariant(k + 1) + alg.invariant(k - 1).scale(gaussian(k * (k - 1 - omega)) / 4)
    return _elem_check(f"recurrence:k={k}", lhs, rhs)


def reduce_to_z(alg: OscAlgebra, k: int) -> Tuple[MultiPoly, OscElement]:
    """``p_k`` with numeric omega and the residual ``I~_k - p_k(z)``."""
    poly = z_polynomial(k, alg.spec.omega)
    residual = alg.invariant_tilde(k) - alg.evaluate_in_z(poly)
    return poly, residual


def verify_invariants(alg: OscAlgebra, kmax: int) -> SuiteReport:
    checks: List[IdentityCheck] = []
    generators = (build_F(alg, 1), build_F(alg, 2))
    for k in range(0, kmax + 1):
        checks.append(verify_invariance(alg, k, generators))
    for k in range(1, kmax):
        checks.append(verify_recurrence(alg, k))
    for k in range(0, kmax + 1):
        poly, residual = reduce_to_z(alg, k)
        if residual.is_zero():
            checks.append(IdentityCheck.passed(f"reduce_to_z:k={k}", note=format_poly(poly)))
        else:
            checks.append(
                IdentityCheck.failed(f"reduce_to_z:k={k}", expected=format_poly(poly), actual=residual.describe())
            )
    return SuiteReport.from_checks("invariants", checks)


def verify_symmetrizer(alg: OscAlgebra, kmax: int) -> SuiteReport:
    """Factorized antisymmetrizer against the permutation sum, plus the swap rule."""
    dim = alg.spec.dim
    checks: List[IdentityCheck] = []
    for k in range(2, min(kmax, 5) + 1):
        disagreements = 0
        for indices in itertools.combinations_with_replacement(range(dim), k):
            letters = tuple((1, a) for a in indices)
            factorized = alg._from_raw(alg.antisymmetrize_factorized(letters))
            oracle = alg._from_raw(alg.antisymmetrize_oracle(letters))
            if not (factorized - oracle).is_zero():
                disagreements += 1
                checks.append(IdentityCheck.failed(f"symmetrizer:k={k}", indices=list(indices), expected="oracle", actual="factorized"))
                break
        if not disagreements:
            checks.append(IdentityCheck.passed(f"symmetrizer:k={k}"))
    swaps: List[IdentityCheck] = []
    for k in range(2, min(kmax, 3) + 1):
        for indices in itertools.product(range(dim), repeat=k):
            base = alg.supersym_product(indices)
            for i, j in itertools.combinations(range(k), 2):
                swapped = list(indices)
                swapped[i], swapped[j] = swapped[j], swapped[i]
                letters = tuple((1, a) for a in indices)
                weight = alg.swap_sign(letters, i, j)
                swaps.append(_elem_check("swap rule", alg.supersym_product(swapped), base.scale(weight), [list(indices), i, j]))
    checks.append(_first_failure("swap rule", swaps))
    return SuiteReport.from_checks("symmetrizer", checks)


def formal_adjoint(element: OscElement) -> OscElement:
    """Antilinear anti-automorphism with ``x+ = x``, ``d+ = -d``, ``b+ = b``."""
    alg = element.algebra
    layout = alg.spec.layout
    if layout is None:
        raise SpecError(f"no conjugation rule for the layout of {alg.spec.name}")
    total = alg.zero()
    for word, coeff in element.terms.items():
        sign = 1
        for _, a in word:
            if layout.kind(a) == "d":
                sign = -sign
        reversed_word = tuple(reversed(word))
        total = total + alg.normal_form(reversed_word).scale(conjugate_poly(coeff) * sign)
    return total


def verify_hermiticity(alg: OscAlgebra, kmax: int) -> SuiteReport:
    checks: List[IdentityCheck] = []
    if alg.spec.layout is None:
        return SuiteReport.from_checks(
            "hermiticity", [IdentityCheck.skipped("hermiticity", "no conjugation rule for a custom layout")]
        )
    z = alg.z()
    checks.append(_elem_check("z+=z", formal_adjoint(z), z))
    checks.append(_elem_check("I1+=-I1", formal_adjoint(alg.invariant(1)), -alg.invariant(1)))
    for k in range(2, kmax + 1):
        tilde = alg.invariant_tilde(k)
        checks.append(_elem_check(f"I~{k}+=I~{k}", formal_adjoint(tilde), tilde))
    return SuiteReport.from_checks("hermiticity", checks)


def verify_z_relations(alg: OscAlgebra) -> SuiteReport:
    spec = alg.spec
    dim = spec.dim
    sigma = alg.sigma
    z = alg.z()
    half_omega = gaussian(spec.omega) / 2
    checks: List[IdentityCheck] = []
    zc1, zc2, shift, sums = [], [], [], []
    for b in range(dim):
        c1, c2 = alg.gen(b, 1), alg.gen(b, 2)
        zc1.append(_elem_check("z c1=c1 z-sigma c2", z * c1, c1 * z - c2.scale(sigma), [b]))
        zc2.append(_elem_check("z c2=sigma c1+c2 z", z * c2, c1.scale(sigma) + c2 * z, [b]))
        for sign in (1, -1):
            cpm = alg.c_pm(b, sign)
            shift.append(_elem_check(f"z c{'+' if sign > 0 else '-'}=c(z{'-' if sign > 0 else '+'}1)", z * cpm, cpm * (z - sign), [b]))
    for a in range(dim):
        for b in range(dim):
            pair = alg.gen(a, 1) * alg.lowered(b, 1) + alg.gen(a, 2) * alg.lowered(b, 2)
            sums.append(_elem_check("[z, c1 c1 + c2 c2]=0", commutator(z, pair), alg.zero(), [a, b]))
    checks.append(_first_failure("z c1=c1 z-sigma c2", zc1))
    checks.append(_first_failure("z c2=sigma c1+c2 z", zc2))
    checks.append(_first_failure("[z, c1 c1 + c2 c2]=0", sums))
    checks.append(_first_failure("z c+-=c+-(z-+1)", shift))

    for sign in (1, -1):
        mark = "+" if sign > 0 else "-"
        c2d = sum((alg.c_pm(d, sign) * alg.lowered(d, 2) for d in range(dim)), alg.zero())
        c1d = sum((alg.c_pm(d, sign) * alg.lowered(d, 1) for d in range(dim)), alg.zero())
        c2c = sum(((alg.lowered(c, 2) * alg.c_pm(c, sign)).scale(_sgn(spec.grading[c])) for c in range(dim)), alg.zero())
        c1c = sum(((alg.lowered(c, 1) * alg.c_pm(c, sign)).scale(_sgn(spec.grading[c])) for c in range(dim)), alg.zero())
        eps = spec.epsilon
        checks.append(_elem_check(f"c{mark}^d c2_d", c2d, (z.scale(-1) + sign * half_omega).scale(sigma)))
        checks.append(_elem_check(f"c{mark}^d c1_d", c1d, z.scale(-sign) + half_omega))
        checks.append(_elem_check(f"c2_c c{mark}^c", c2c, (z + sign * half_omega).scale(eps * sigma)))
        checks.append(_elem_check(f"c1_c c{mark}^c", c1c, (z.scale(sign) + half_omega).scale(eps)))
    return SuiteReport.from_checks("z_relations", checks)


def sandwich(alg: OscAlgebra, left_sign: int, right_sign: int) -> Tuple[OscElement, OscElement]:
    """Scalar projections of the u-linear RLL component, with the R-operator stripped.

    Returns ``(X_L, X_R)`` with ``X_L = c^d eps_da (u d^a_b + eps (-1)^b c_1^a c_1b)
    (-1)^c c_2^b c_2c c^c`` and ``X_R = c^d eps_da (-1)^b c_1^a c_1b
    (u d^b_c + eps (-1)^c c_2^b c_2c) c^c``, the outer ``c`` being ``c_+-``.
    """
    spec = alg.spec
    dim, g, eps = spec.dim, spec.grading, spec.epsilon
    u = alg.scalar(U)
    left = [sum((alg.c_pm(d, left_sign).scale(spec.eps(d, a)) for d in range(dim)), alg.zero()) for a in range(dim)]
    c11 = {(a, b): alg.gen(a, 1) * alg.lowered(b, 1) for a in range(dim) for b in range(dim)}
    c22 = {(b, c): alg.gen(b, 2) * alg.lowered(c, 2) for b in range(dim) for c in range(dim)}
    right = [alg.c_pm(c, right_sign) for c in range(dim)]

    first = {
        (a, b): c11[(a, b)].scale(eps * _sgn(g[b])) + (u if a == b else alg.zero())
        for a in range(dim)
        for b in range(dim)
    }
    second = {
        (b, c): c22[(b, c)].scale(eps * _sgn(g[c])) + (u if b == c else alg.zero())
        for b in range(dim)
        for c in range(dim)
    }
    tail_l = [sum((c22[(b, c)].scale(_sgn(g[c])) * right[c] for c in range(dim)), alg.zero()) for b in range(dim)]
    tail_r = [sum((second[(b, c)] * right[c] for c in range(dim)), alg.zero()) for b in range(dim)]
    x_left = alg.zero()
    x_right = alg.zero()
    for a in range(dim):
        if left[a].is_zero():
            continue
        for b in range(dim):
            x_left = x_left + left[a] * first[(a, b)] * tail_l[b]
            x_right = x_right + left[a] * c11[(a, b)].scale(_sgn(g[b])) * tail_r[b]
    return x_left, x_right


def verify_scalar_projections(alg: OscAlgebra) -> SuiteReport:
    """``c+- ... c+-`` sandwiches give ``eps(+-u -+ z)(z^2 - omega^2/4)``; ``c-+ ... c+-`` give ``eps(u +- z)(z +- omega/2)^2``."""
    spec = alg.spec
    eps = spec.epsilon
    half = RING(gaussian(spec.omega) / 2)
    common = Z**2 - half**2
    checks: List[IdentityCheck] = []
    for sign in (1, -1):
        mark = "+" if sign > 0 else "-"
        x_left, x_right = sandwich(alg, sign, sign)
        checks.append(
            _elem_check(f"projection:{mark}{mark}:left", x_left, alg.evaluate_in_z(RING(eps) * (U - sign * Z) * common))
        )
        checks.append(
            _elem_check(f"projection:{mark}{mark}:right", x_right, alg.evaluate_in_z(RING(eps) * (-U - sign * Z) * common))
        )
        x_left, x_right = sandwich(alg, -sign, sign)
        target = RING(eps) * (U + sign * Z) * (Z + sign * half) ** 2
        checks.append(_elem_check(f"projection:{'-' if sign > 0 else '+'}{mark}:left", x_left, alg.evaluate_in_z(target)))
        checks.append(_elem_check(f"projection:{'-' if sign > 0 else '+'}{mark}:right", x_right, alg.evaluate_in_z(target)))
    return SuiteReport.from_checks("scalar_projections", checks)


__all__ = [
    "FGenerator",
    "Letter",
    "OscAlgebra",
    "OscElement",
    "Word",
    "adjoint_matrix",
    "build_B",
    "build_F",
    "build_L_osc",
    "commutator",
    "formal_adjoint",
    "reduce_to_z",
    "sandwich",
    "supercommutator",
    "verify_F_properties",
    "verify_contractions",
    "verify_hermiticity",
    "verify_invariance",
    "verify_invariants",
    "verify_recurrence",
    "verify_rll_osc",
    "verify_scalar_projections",
    "verify_symmetrizer",
    "verify_z_relations",
    "z_polynomial",
]
