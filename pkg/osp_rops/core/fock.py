# -*- coding: utf-8 -*-
"""Truncated Fock representations of the oscillator algebra and the spectrum of z.

Bosonic generators act on polynomials in ``x^1..x^m`` (``x`` multiplies,
``d`` differentiates) whose joint total degree over all tensor factors is at
most the cutoff ``C``; fermionic generators act on a Jordan-Wigner Clifford
module.  Words are applied state by state, so only the final image is cut at
degree ``C``: an element whose words carry at most ``k`` raising letters is
exact on every vector of degree ``<= C - k``.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from math import factorial, prod
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix

from .algebra import AlgebraSpec
from .errors import ConfigurationError, OracleError, SpecError, TruncationError
from .osc import OscAlgebra, OscElement, Word, formal_adjoint
from .report import IdentityCheck, SuiteReport
from .scalars import I_UNIT, ONE, POLY, RING, ZERO, Scalar, conjugate, format_poly, format_scalar, gaussian


logger = logging.getLogger(__name__)

Part = Tuple[Tuple[int, ...], int]
State = Tuple[Part, ...]
Vector = Dict[State, Any]


def _sgn(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def _popcount(value: int) -> int:
    return bin(value).count("1")


def _compositions(total: int, parts: int) -> Iterable[Tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for head in range(total, -1, -1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def fermion_spectrum(n: int) -> List[Any]:
    """``Omega_n = {-n/2, -n/2 + 1, ..., n/2}``."""
    return [QQ(2 * k - n, 2) for k in range(n + 1)]


def chain_key(lam: Any) -> Any:
    """``lambda mod 2`` in ``[0, 2)``."""
    num, den = int(lam.numerator), int(lam.denominator)
    return QQ(num % (2 * den), den)


def fmt_eigenvalue(lam: Any) -> str:
    return format_scalar(gaussian(lam))


@dataclass(frozen=True)
class CliffordModule:
    """``n`` generators with ``{b^a, b^b} = 2 delta`` on ``2^ceil(n/2)`` states.

    Generator ``2k`` is ``Z..Z X`` and ``2k+1`` is ``Z..Z Y`` on qubit ``k``; the
    parity ``Z..Z`` over all qubits anticommutes with every generator.
    """

    n: int

    @property
    def qubits(self) -> int:
        return (self.n + 1) // 2

    @property
    def dim(self) -> int:
        return 2**self.qubits

    def act(self, alpha: int, f: int) -> Tuple[int, Scalar]:
        k = alpha // 2
        bit = 1 << k
        coeff = gaussian(_sgn(_popcount(f & (bit - 1))))
        if alpha % 2:
            coeff = coeff * (I_UNIT if not f & bit else -I_UNIT)
        return f ^ bit, coeff

    def parity(self, f: int) -> int:
        return _sgn(_popcount(f))


@dataclass(frozen=True)
class FockBasis:
    """Basis states ``((occupations, fermion bits), ...)`` ordered by total degree."""

    modes: int
    factors: int
    cutoff: int
    fermion_dim: int
    states: Tuple[State, ...] = field(init=False)
    index: Dict[State, int] = field(init=False, repr=False, compare=False)
    degrees: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        states: List[State] = []
        fermions = list(itertools.product(range(self.fermion_dim), repeat=self.factors))
        for d in range(self.cutoff + 1):
            for occ in _compositions(d, self.modes * self.factors):
                for bits in fermions:
                    states.append(
                        tuple(
                            (occ[i * self.modes : (i + 1) * self.modes], bits[i])
                            for i in range(self.factors)
                        )
                    )
        object.__setattr__(self, "states", tuple(states))
        object.__setattr__(self, "index", {s: i for i, s in enumerate(states)})
        object.__setattr__(self, "degrees", tuple(self.degree(s) for s in states))

    @staticmethod
    def degree(state: State) -> int:
        return sum(sum(occ) for occ, _ in state)

    @property
    def dim(self) -> int:
        return len(self.states)

    def block(self, d: int) -> List[int]:
        return [i for i, deg in enumerate(self.degrees) if deg == d]


@dataclass(frozen=True)
class SafeSubspace:
    """Basis vectors of degree at most ``d_max``, where identities of a given budget are exact."""

    d_max: int
    indices: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.indices)


class FockRep:
    """Matrices of ``c^a`` (one factor) or ``c_1^a``, ``c_2^a`` (two factors).

    With epsilon = -1 the bosons are even and ``c_2`` carries the fermion parity
    of factor 1 on odd letters.  With epsilon = +1 the bosons are odd and every
    boson also carries the fermion parity of its own factor, so ``x`` and ``b``
    anticommute; ``c_2`` additionally carries ``Q = (-1)^{deg} Z..Z`` of factor
    1, which anticommutes with all of factor 1.
    """

    def __init__(self, spec: AlgebraSpec, cutoff: int, *, factors: int = 2, sigma: Scalar = I_UNIT) -> None:
        layout = spec.layout
        if layout is None:
            raise SpecError(f"{spec.name}: a Fock realization needs the standard x/d/b layout")
        if spec.epsilon == 1 and layout.n % 2:
            raise SpecError(f"{spec.name}: no concrete realization defined for epsilon=+1 with odd N={layout.n}")
        if cutoff < 0:
            raise ConfigurationError(f"cutoff must be non-negative, got {cutoff}")
        if factors not in (1, 2):
            raise ConfigurationError(f"factors must be 1 or 2, got {factors}")
        self.spec = spec
        self.layout = layout
        self.cutoff = cutoff
        self.factors = factors
        self.algebra = OscAlgebra(spec, sigma)
        self.clifford = CliffordModule(layout.n)
        self.basis = FockBasis(
            modes=layout.m, factors=factors, cutoff=cutoff, fermion_dim=self.clifford.dim
        )
        self._word_cache: Dict[Tuple[Word, State], Vector] = {}
        self._generators: Dict[Tuple[int, int], DomainMatrix] = {}
        logger.debug("fock rep %s: C=%d factors=%d dim=%d", spec.name, cutoff, factors, self.basis.dim)

    @property
    def dim(self) -> int:
        return self.basis.dim

    # -- action on states --------------------------------------------------------------

    def _grading_sign(self, part: Part) -> int:
        occ, f = part
        if self.spec.epsilon == -1:
            return self.clifford.parity(f)
        return _sgn(sum(occ))

    def _cross_sign(self, part: Part, a: int) -> int:
        sign = self._grading_sign(part) if self.spec.grading[a] else 1
        if self.spec.epsilon == 1:
            occ, f = part
            sign *= _sgn(sum(occ)) * self.clifford.parity(f)
        return sign

    def act_letter(self, letter: Tuple[int, int], state: State) -> List[Tuple[State, Scalar]]:
        factor, a = letter
        if factor > self.factors:
            raise ConfigurationError(f"letter on factor {factor} in a {self.factors}-factor representation")
        occ, f = state[factor - 1]
        kind = self.layout.kind(a)
        m = self.layout.m
        if kind == "b":
            f2, coeff = self.clifford.act(a - 2 * m, f)
            new_part: Part = (occ, f2)
        else:
            j = a if kind == "x" else a - m
            if kind == "x":
                coeff = ONE
                new_occ = occ[:j] + (occ[j] + 1,) + occ[j + 1 :]
            else:
                if not occ[j]:
                    return []
                coeff = gaussian(occ[j])
                new_occ = occ[:j] + (occ[j] - 1,) + occ[j + 1 :]
            if self.spec.epsilon == 1:
                coeff = coeff * self.clifford.parity(f)
            new_part = (new_occ, f)
        if factor == 2:
            coeff = coeff * self._cross_sign(state[0], a)
        parts = list(state)
        parts[factor - 1] = new_part
        return [(tuple(parts), coeff)]

    def act_word(self, word: Word, state: State) -> Vector:
        """Apply ``c_{w_1} ... c_{w_k}`` to a basis state, rightmost letter first, without truncation."""
        key = (word, state)
        cached = self._word_cache.get(key)
        if cached is not None:
            return cached
        current: Vector = {state: ONE}
        for letter in reversed(word):
            nxt: Vector = {}
            for s, c in current.items():
                for s2, c2 in self.act_letter(letter, s):
                    nxt[s2] = nxt.get(s2, ZERO) + c * c2
            current = {s: c for s, c in nxt.items() if c}
        self._word_cache[key] = current
        return current

    # -- matrices ----------------------------------------------------------------------

    def raising_budget(self, element: OscElement) -> int:
        """Largest number of ``x`` letters in one word of ``element``."""
        kinds = self.layout.kind
        return max((sum(1 for _, a in w if kinds(a) == "x") for w in element.terms), default=0)

    def rep_of(self, element: OscElement) -> DomainMatrix:
        """Matrix of ``element``; over ``QQ_I`` when its coefficients are scalars, else over the polynomial ring."""
        budget = self.raising_budget(element)
        if budget > self.cutoff:
            raise TruncationError(
                f"element raises the boson degree by {budget} but the cutoff is C={self.cutoff}"
            )
        ground = all(c.is_ground for c in element.terms.values())
        domain = QQ_I if ground else POLY
        coeffs = {w: (c.LC if ground else c) for w, c in element.terms.items()}
        index = self.basis.index
        dod: Dict[int, Dict[int, Any]] = {}
        for col, state in enumerate(self.basis.states):
            for word, coeff in coeffs.items():
                for image, value in self.act_word(word, state).items():
                    row = index.get(image)
                    if row is None:
                        continue
                    entry = coeff * value if ground else coeff * RING(value)
                    line = dod.setdefault(row, {})
                    line[col] = line.get(col, domain.zero) + entry
        clean = {r: {c: v for c, v in line.items() if v} for r, line in dod.items()}
        return DomainMatrix.from_dod({r: line for r, line in clean.items() if line}, (self.dim, self.dim), domain)

    def generator(self, a: int, factor: int = 1) -> DomainMatrix:
        key = (factor, a)
        if key not in self._generators:
            self._generators[key] = self.rep_of(self.algebra.gen(a, factor))
        return self._generators[key]

    def identity(self) -> DomainMatrix:
        return DomainMatrix.eye(self.dim, QQ_I)

    def safe_subspace(self, budget: int) -> SafeSubspace:
        d_max = self.cutoff - budget
        if d_max < 0:
            raise TruncationError(f"budget {budget} exceeds the cutoff C={self.cutoff}")
        return SafeSubspace(d_max, tuple(i for i, d in enumerate(self.basis.degrees) if d <= d_max))

    def gram_weights(self) -> List[int]:
        """Diagonal Gram form ``<s|s> = prod n_j!`` over all boson modes of all factors."""
        return [prod(factorial(n) for occ, _ in state for n in occ) for state in self.basis.states]

    def bosonic_z(self) -> OscElement:
        return self._z_part(("x", "d"))

    def fermionic_z(self) -> OscElement:
        return self._z_part(("b",))

    def _z_part(self, kinds: Sequence[str]) -> OscElement:
        alg = self.algebra
        total = alg.zero()
        for a, b, value in alg.metric_pairs():
            if self.layout.kind(a) in kinds:
                total = total + (alg.gen(a, 1) * alg.gen(b, 2)).scale(value)
        return total.scale(alg.sigma)


def default_cutoff(spec: AlgebraSpec) -> int:
    """C = 8 with one boson mode, C = 4 otherwise."""
    layout = spec.layout
    return 8 if layout is not None and layout.m == 1 else 4


def build_rep(spec: AlgebraSpec, cutoff: int, *, sigma: Scalar = I_UNIT) -> FockRep:
    """Two-factor representation; all generator matrices are built eagerly."""
    if cutoff < 2:
        raise ConfigurationError(f"the Fock cutoff must be at least 2, got {cutoff}")
    rep = FockRep(spec, cutoff, factors=2, sigma=sigma)
    for factor in (1, 2):
        for a in range(spec.dim):
            rep.generator(a, factor)
    return rep


# -- matrix helpers --------------------------------------------------------------------


def unify(*matrices: DomainMatrix) -> List[DomainMatrix]:
    domains = {m.domain for m in matrices}
    if len(domains) > 1:
        target = POLY if all(d in (QQ_I, POLY) for d in domains) else None
        if target is None:
            first, *rest = matrices
            return list(first.unify(*rest, fmt="sparse"))
        matrices = tuple(m.convert_to(target) for m in matrices)
    return [m.to_sparse() for m in matrices]


def matmul(*matrices: DomainMatrix) -> DomainMatrix:
    ms = unify(*matrices)
    result = ms[0]
    for m in ms[1:]:
        result = result.matmul(m)
    return result


def difference_on(left: DomainMatrix, right: DomainMatrix, columns: Optional[Iterable[int]] = None) -> Optional[Dict[str, Any]]:
    """First entry where ``left`` and ``right`` differ, restricted to ``columns``."""
    a, b = unify(left, right)
    allowed = None if columns is None else set(columns)
    for row, line in sorted(a.sub(b).to_dod().items()):
        for col, value in sorted(line.items()):
            if allowed is None or col in allowed:
                return {
                    "indices": [row, col],
                    "expected": format_poly(_entry(b, row, col)),
                    "actual": format_poly(_entry(a, row, col)),
                }
    return None


def _entry(m: DomainMatrix, row: int, col: int) -> Any:
    value = m.to_dod().get(row, {}).get(col)
    return value if value is not None else m.domain.zero


def matrix_check(name: str, left: DomainMatrix, right: DomainMatrix, safe: Optional[SafeSubspace] = None, indices: Iterable[Any] = ()) -> IdentityCheck:
    witness = difference_on(left, right, None if safe is None else safe.indices)
    if witness is None:
        return IdentityCheck.passed(name)
    return IdentityCheck.failed(
        name,
        indices=list(indices) + witness["indices"],
        expected=witness["expected"],
        actual=witness["actual"],
    )


def _first_failure(name: str, checks: List[IdentityCheck]) -> IdentityCheck:
    for check in checks:
        if check.status == "fail":
            return IdentityCheck(name=name, status="fail", witness=check.witness)
    return IdentityCheck.passed(name, note=f"{len(checks)} components")


def _shift(m: DomainMatrix, value: Any) -> DomainMatrix:
    n = m.shape[0]
    return m.sub(DomainMatrix.eye(n, m.domain).scalarmul(m.domain.convert(value)))


# -- spectral decomposition ------------------------------------------------------------


@dataclass(frozen=True)
class Eigenspace:
    eigenvalue: Any
    degree: int
    multiplicity: int
    projector: DomainMatrix = field(repr=False, compare=False)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lambda": format_scalar(gaussian(self.eigenvalue)),
            "multiplicity": self.multiplicity,
            "degree_block": self.degree,
        }


@dataclass
class SpectralDecomposition:
    """Exact eigenspaces of one operator, per total-degree block, ascending in ``lambda``."""

    rep: FockRep
    operator: DomainMatrix
    spaces: List[Eigenspace]

    def eigenvalues(self) -> List[Any]:
        return sorted({s.eigenvalue for s in self.spaces})

    def projector(self, eigenvalue: Any) -> DomainMatrix:
        total = DomainMatrix.zeros((self.rep.dim, self.rep.dim), QQ_I)
        for space in self.spaces:
            if space.eigenvalue == eigenvalue:
                total = total.add(space.projector)
        return total

    def multiplicities(self) -> Dict[Any, int]:
        counts: Dict[Any, int] = {}
        for space in self.spaces:
            counts[space.eigenvalue] = counts.get(space.eigenvalue, 0) + space.multiplicity
        return counts

    def chains(self) -> Dict[Any, List[Any]]:
        """Eigenvalues grouped by ``lambda mod 2``."""
        groups: Dict[Any, List[Any]] = {}
        for lam in self.eigenvalues():
            groups.setdefault(chain_key(lam), []).append(lam)
        return groups

    def table(self) -> List[Dict[str, Any]]:
        return [s.to_dict() for s in sorted(self.spaces, key=lambda s: (s.degree, s.eigenvalue))]


def _block_eigenspaces(op: DomainMatrix, indices: List[int], candidates: Sequence[Any], size: int, degree: int) -> List[Eigenspace]:
    block = op.extract(indices, indices)
    found: List[Tuple[Any, DomainMatrix]] = []
    for lam in candidates:
        null = _shift(block, gaussian(lam)).nullspace()
        if null.shape[0]:
            found.append((lam, null))
    total = sum(null.shape[0] for _, null in found)
    if total != len(indices):
        raise OracleError(
            f"degree block {degree}: eigenvectors span {total} of {len(indices)} dimensions; "
            "the operator is not diagonalizable over the expected spectrum"
        )
    vectors = found[0][1].vstack(*[null for _, null in found[1:]]).transpose()
    inverse = vectors.inv()
    spaces: List[Eigenspace] = []
    start = 0
    for lam, null in found:
        cols = list(range(start, start + null.shape[0]))
        start += null.shape[0]
        local = vectors.extract(list(range(len(indices))), cols).matmul(inverse.extract(cols, list(range(len(indices)))))
        dod = {
            indices[r]: {indices[c]: v for c, v in line.items()}
            for r, line in local.to_sparse().to_dod().items()
        }
        spaces.append(
            Eigenspace(
                eigenvalue=lam,
                degree=degree,
                multiplicity=null.shape[0],
                projector=DomainMatrix.from_dod(dod, (size, size), QQ_I),
            )
        )
    return spaces


def decompose(rep: FockRep, op: DomainMatrix, fermionic: bool = True) -> SpectralDecomposition:
    """Eigenspaces of a degree-preserving operator whose spectrum on block ``d`` lies in ``[-d, d] + Omega_n``."""
    omega_n = fermion_spectrum(rep.layout.n) if fermionic else [QQ(0)]
    spaces: List[Eigenspace] = []
    for d in range(rep.cutoff + 1):
        indices = rep.basis.block(d)
        if not indices:
            continue
        candidates = sorted({QQ(j) + ell for j in range(-d, d + 1) for ell in omega_n})
        spaces.extend(_block_eigenspaces(op, indices, candidates, rep.dim, d))
        logger.debug("degree block %d: %d eigenspaces", d, len(spaces))
    return SpectralDecomposition(rep=rep, operator=op, spaces=sorted(spaces, key=lambda s: (s.eigenvalue, s.degree)))


def spectral_z(rep: FockRep) -> SpectralDecomposition:
    if rep.factors != 2:
        raise ConfigurationError("z needs the two-factor representation")
    if rep.layout.m < 1:
        raise SpecError(f"{rep.spec.name}: the spectrum of z needs at least one boson mode")
    return decompose(rep, rep.rep_of(rep.algebra.z()))


def verify_spectral(decomposition: SpectralDecomposition) -> SuiteReport:
    rep = decomposition.rep
    op = decomposition.operator
    identity = rep.identity()
    eigenvalues = decomposition.eigenvalues()
    projectors = {lam: decomposition.projector(lam) for lam in eigenvalues}
    checks: List[IdentityCheck] = []
    idem, ortho, eigen = [], [], []
    for lam in eigenvalues:
        p = projectors[lam]
        idem.append(matrix_check("projector idempotent", p.matmul(p), p, indices=[fmt_eigenvalue(lam)]))
        eigen.append(matrix_check("z P=lambda P", op.matmul(p), p.scalarmul(gaussian(lam)), indices=[fmt_eigenvalue(lam)]))
        for mu in eigenvalues:
            if mu > lam:
                ortho.append(
                    matrix_check("projectors orthogonal", p.matmul(projectors[mu]), DomainMatrix.zeros(p.shape, QQ_I), indices=[fmt_eigenvalue(lam), fmt_eigenvalue(mu)])
                )
    total = DomainMatrix.zeros((rep.dim, rep.dim), QQ_I)
    for p in projectors.values():
        total = total.add(p)
    checks.append(_first_failure("projector idempotent", idem))
    checks.append(_first_failure("projectors orthogonal", ortho))
    checks.append(_first_failure("z P=lambda P", eigen))
    checks.append(matrix_check("projectors complete", total, identity))
    symmetric: List[IdentityCheck] = []
    for d in range(rep.cutoff + 1):
        block = {s.eigenvalue: s.multiplicity for s in decomposition.spaces if s.degree == d}
        for lam, mult in block.items():
            if block.get(-lam, 0) != mult:
                symmetric.append(
                    IdentityCheck.failed("multiplicities symmetric", indices=[d, fmt_eigenvalue(lam)], expected=str(mult), actual=str(block.get(-lam, 0)))
                )
    checks.append(_first_failure("multiplicities symmetric", symmetric) if symmetric else IdentityCheck.passed("multiplicities symmetric"))
    return SuiteReport.from_checks("spectrum", checks)


# -- fermionic projectors --------------------------------------------------------------


@dataclass
class FermionProjectors:
    """``P_l = prod_{m != l} (b - m)/(l - m)`` for the fermionic part ``b`` of z."""

    rep: FockRep
    b: DomainMatrix
    projectors: Dict[Any, DomainMatrix]


def fermion_projectors(rep: FockRep) -> FermionProjectors:
    """Projectors on ``rep`` itself, so they combine with its bosonic operators."""
    b = rep.rep_of(rep.fermionic_z())
    identity = rep.identity()
    omega_n = fermion_spectrum(rep.layout.n)
    projectors: Dict[Any, DomainMatrix] = {}
    for ell in omega_n:
        p = identity
        for other in omega_n:
            if other == ell:
                continue
            p = p.matmul(_shift(b, gaussian(other))).scalarmul(QQ_I.convert(ONE / gaussian(ell - other)))
        projectors[ell] = p
    return FermionProjectors(rep=rep, b=b, projectors=projectors)


def fermion_rep(spec: AlgebraSpec, *, sigma: Scalar = I_UNIT) -> FockRep:
    """The pure fermion two-factor space (cutoff 0)."""
    return FockRep(spec, 0, factors=2, sigma=sigma)


def verify_fermion_projectors(family: FermionProjectors) -> SuiteReport:
    rep = family.rep
    b = family.b
    identity = rep.identity()
    zero = DomainMatrix.zeros((rep.dim, rep.dim), QQ_I)
    checks: List[IdentityCheck] = []
    characteristic = identity
    for ell in family.projectors:
        characteristic = characteristic.matmul(_shift(b, gaussian(ell)))
    checks.append(matrix_check("prod (b - l)=0", characteristic, zero))
    total = zero
    idem, ortho, eigen = [], [], []
    for ell, p in family.projectors.items():
        total = total.add(p)
        idem.append(matrix_check("P_l idempotent", p.matmul(p), p, indices=[fmt_eigenvalue(ell)]))
        eigen.append(matrix_check("b P_l=l P_l", b.matmul(p), p.scalarmul(gaussian(ell)), indices=[fmt_eigenvalue(ell)]))
        for other, q in family.projectors.items():
            if other > ell:
                ortho.append(matrix_check("P_l orthogonal", p.matmul(q), zero, indices=[fmt_eigenvalue(ell), fmt_eigenvalue(other)]))
    checks.append(matrix_check("sum P_l=1", total, identity))
    checks.append(_first_failure("P_l idempotent", idem))
    checks.append(_first_failure("P_l orthogonal", ortho))
    checks.append(_first_failure("b P_l=l P_l", eigen))
    present = sorted(ell for ell, p in family.projectors.items() if not p.is_zero_matrix)
    expected = fermion_spectrum(rep.layout.n)
    if present == expected:
        checks.append(IdentityCheck.passed("fermionic spectrum=Omega_n", note=", ".join(fmt_eigenvalue(e) for e in present)))
    else:
        checks.append(
            IdentityCheck.failed(
                "fermionic spectrum=Omega_n",
                expected=", ".join(fmt_eigenvalue(e) for e in expected),
                actual=", ".join(fmt_eigenvalue(e) for e in present),
            )
        )
    return SuiteReport.from_checks("fermion_projectors", checks)


# -- Hermitian conjugation -------------------------------------------------------------


def hermitian_frame(element: OscElement) -> OscElement:
    """Substitute ``x -> x + d`` and ``d -> (d - x)/2`` on every boson mode.

    The substitution keeps ``[x, d] = -1``.  In the substituted realization the
    conjugation rules ``x+ = x``, ``d+ = -d``, ``b+ = b`` are conjugate
    transposes with respect to ``FockRep.gram_weights``.
    """
    alg = element.algebra
    layout = alg.spec.layout
    if layout is None:
        raise SpecError(f"no conjugation rule for the layout of {alg.spec.name}")
    m = layout.m
    half = gaussian(QQ(1, 2))
    images: Dict[Tuple[int, int], OscElement] = {}

    def image(letter: Tuple[int, int]) -> OscElement:
        if letter not in images:
            factor, a = letter
            kind = layout.kind(a)
            if kind == "x":
                images[letter] = alg.gen(a, factor) + alg.gen(a + m, factor)
            elif kind == "d":
                images[letter] = (alg.gen(a, factor) - alg.gen(a - m, factor)).scale(half)
            else:
                images[letter] = alg.gen(a, factor)
        return images[letter]

    total = alg.zero()
    for word, coeff in element.terms.items():
        term = alg.scalar(coeff)
        for letter in word:
            term = term * image(letter)
        total = total + term
    return total


def hermitian_conjugate(rep: FockRep, matrix: DomainMatrix) -> DomainMatrix:
    """``G^-1 M^H G`` for the diagonal Gram form ``G`` of ``rep``."""
    if matrix.domain != QQ_I:
        raise ConfigurationError("the conjugate transpose needs scalar matrix entries")
    weights = rep.gram_weights()
    dod: Dict[int, Dict[int, Any]] = {}
    for row, line in matrix.to_sparse().to_dod().items():
        for col, value in line.items():
            dod.setdefault(col, {})[row] = conjugate(value) * gaussian(QQ(weights[row], weights[col]))
    return DomainMatrix.from_dod(dod, matrix.shape, QQ_I)


def verify_hermiticity_on(rep: FockRep) -> List[IdentityCheck]:
    """Conjugation rules of the generators and ``z+ = z`` as conjugate transposes."""
    alg = rep.algebra
    safe1 = rep.safe_subspace(1)
    rules = []
    for factor in range(1, rep.factors + 1):
        for a in range(rep.spec.dim):
            g = rep.rep_of(hermitian_frame(alg.gen(a, factor)))
            sign = -1 if rep.layout.kind(a) == "d" else 1
            rules.append(
                matrix_check("conjugation rules", hermitian_conjugate(rep, g), g.scalarmul(gaussian(sign)), safe1, [factor, a])
            )
    checks = [_first_failure("conjugation rules", rules)]
    if rep.factors == 2:
        safe2 = rep.safe_subspace(2)
        z = rep.rep_of(hermitian_frame(alg.z()))
        z_conj = hermitian_conjugate(rep, z)
        checks.append(matrix_check("z+=z", z_conj, z, safe2))
        adjoint = rep.rep_of(hermitian_frame(formal_adjoint(alg.z())))
        checks.append(matrix_check("rep(z+)=rep(z)+", adjoint, z_conj, safe2))
    return checks


# -- representation identities ---------------------------------------------------------


def verify_rep_identities(rep: FockRep) -> SuiteReport:
    """Defining relations, z relations and Hermiticity as matrix identities on safe subspaces."""
    spec = rep.spec
    alg = rep.algebra
    dim, g, eps = spec.dim, spec.grading, spec.epsilon
    safe1 = rep.safe_subspace(1)
    safe2 = rep.safe_subspace(2)
    identity = rep.identity()
    checks: List[IdentityCheck] = []

    relations, cross, words = [], [], []
    for factor in range(1, rep.factors + 1):
        for a in range(dim):
            for b in range(dim):
                ca, cb = rep.generator(a, factor), rep.generator(b, factor)
                lhs = ca.matmul(cb).add(cb.matmul(ca).scalarmul(gaussian(eps * _sgn(g[a] * g[b]))))
                rhs = identity.scalarmul(spec.eps_bar(a, b))
                relations.append(matrix_check("defining relation", lhs, rhs, safe1, [factor, a, b]))
                raw = ca.matmul(cb)
                words.append(matrix_check("rep respects rewriting", raw, rep.rep_of(alg.normal_form([(factor, a), (factor, b)])), safe2, [factor, a, b]))
    if rep.factors == 2:
        for a in range(dim):
            for b in range(dim):
                c1, c2 = rep.generator(a, 1), rep.generator(b, 2)
                weight = gaussian(-eps * _sgn(g[a] * g[b]))
                cross.append(matrix_check("c1 c2=-eps(-1)^{ab} c2 c1", c1.matmul(c2), c2.matmul(c1).scalarmul(weight), safe2, [a, b]))
    checks.append(_first_failure("defining relation", relations))
    checks.append(_first_failure("rep respects rewriting", words))
    if cross:
        checks.append(_first_failure("c1 c2=-eps(-1)^{ab} c2 c1", cross))

    m = rep.layout.m
    heis = []
    for j in range(m):
        x, d = rep.generator(j, 1), rep.generator(m + j, 1)
        heis.append(matrix_check("[x,d]=-1", x.matmul(d).sub(d.matmul(x)), identity.scalarmul(gaussian(-1)), safe1, [j]))
    checks.append(_first_failure("[x,d]=-1", heis) if heis else IdentityCheck.skipped("[x,d]=-1", "no boson modes"))

    if eps == 1:
        mixed = []
        for a in range(dim):
            for b in range(dim):
                if g[a] != g[b]:
                    ca, cb = rep.generator(a, 1), rep.generator(b, 1)
                    mixed.append(matrix_check("mixed generators anticommute", ca.matmul(cb), cb.matmul(ca).scalarmul(gaussian(-1)), safe2, [a, b]))
        checks.append(_first_failure("mixed generators anticommute", mixed))

    contraction = alg.zero()
    for a in range(dim):
        contraction = contraction + alg.gen(a, 1) * alg.lowered(a, 1)
    raw_contraction = DomainMatrix.zeros((rep.dim, rep.dim), QQ_I)
    for a in range(dim):
        for b, value in spec.lowering_partners(a):
            raw_contraction = raw_contraction.add(rep.generator(a, 1).matmul(rep.generator(b, 1)).scalarmul(value))
    checks.append(matrix_check("c^a c_a=omega/2", raw_contraction, identity.scalarmul(gaussian(spec.omega) / 2), safe1))
    checks.append(matrix_check("rep_of(c^a c_a)=omega/2", rep.rep_of(contraction), identity.scalarmul(gaussian(spec.omega) / 2), safe1))

    if rep.factors == 2:
        z = rep.rep_of(alg.z())
        sigma = alg.sigma
        zc = []
        for b in range(dim):
            c1, c2 = rep.generator(b, 1), rep.generator(b, 2)
            zc.append(matrix_check("z c1=c1 z-sigma c2", z.matmul(c1), c1.matmul(z).sub(c2.scalarmul(sigma)), safe2, [b]))
            zc.append(matrix_check("z c2=sigma c1+c2 z", z.matmul(c2), c1.scalarmul(sigma).add(c2.matmul(z)), safe2, [b]))
            for sign in (1, -1):
                cpm = c1.add(c2.scalarmul(sigma * sign))
                zc.append(matrix_check("z c+-=c+-(z-+1)", z.matmul(cpm), cpm.matmul(_shift(z, gaussian(sign))), safe2, [b, sign]))
        checks.append(_first_failure("z relations", zc))
        commuting = []
        for a in range(dim):
            for c in range(dim):
                pair = alg.gen(a, 1) * alg.lowered(c, 1) + alg.gen(a, 2) * alg.lowered(c, 2)
                pm = rep.rep_of(pair)
                commuting.append(matrix_check("[z, c1 c1 + c2 c2]=0", z.matmul(pm), pm.matmul(z), safe2, [a, c]))
        checks.append(_first_failure("[z, c1 c1 + c2 c2]=0", commuting))
    checks.extend(verify_hermiticity_on(rep))
    return SuiteReport.from_checks("fock", checks)


def spectrum_table(decomposition: SpectralDecomposition) -> List[Dict[str, Any]]:
    return decomposition.table()


__all__ = [
    "CliffordModule",
    "Eigenspace",
    "FermionProjectors",
    "FockBasis",
    "FockRep",
    "SafeSubspace",
    "SpectralDecomposition",
    "build_rep",
    "chain_key",
    "decompose",
    "default_cutoff",
    "difference_on",
    "fermion_projectors",
    "fermion_rep",
    "fermion_spectrum",
    "fmt_eigenvalue",
    "hermitian_conjugate",
    "hermitian_frame",
    "matmul",
    "matrix_check",
    "spectral_z",
    "spectrum_table",
    "unify",
    "verify_fermion_projectors",
    "verify_hermiticity_on",
    "verify_rep_identities",
    "verify_spectral",
]
