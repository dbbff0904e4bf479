# -*- coding: utf-8 -*-
"""Algebra specification: graded defining space and its supermetric."""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import yaml
from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

from .errors import ConfigurationError, SpecError
from .scalars import ONE, ZERO, Scalar, format_scalar, gaussian, to_scalar


logger = logging.getLogger(__name__)

_PRESET_RE = re.compile(r"^\s*(osp|so|sp)\s*:\s*(\d+)\s*(?::\s*(\d+))?\s*$", re.IGNORECASE)

Matrix = Tuple[Tuple[Scalar, ...], ...]


@dataclass(frozen=True)
class Layout:
    """Index blocks of the standard layout: x^1..m, d^1..m, then b^1..n."""

    m: int
    n: int

    def kind(self, a: int) -> str:
        if a < self.m:
            return "x"
        if a < 2 * self.m:
            return "d"
        return "b"


@dataclass(frozen=True)
class AlgebraSpec:
    """Graded space V(N|M) with sign epsilon and metric pair (eps_ab, eps-bar^ab)."""

    grading: Tuple[int, ...]
    epsilon: int
    metric: Matrix
    inverse_metric: Matrix
    name: str = "custom"
    layout: Optional[Layout] = None
    validated: bool = field(default=False, compare=False)

    @property
    def dim(self) -> int:
        return len(self.grading)

    @property
    def n_even(self) -> int:
        return sum(1 for g in self.grading if g == 0)

    @property
    def n_odd(self) -> int:
        return self.dim - self.n_even

    @property
    def omega(self) -> int:
        return self.epsilon * (self.n_even - self.n_odd)

    @property
    def beta(self) -> Scalar:
        return ONE - gaussian(self.omega) / 2

    def parity(self, a: int) -> int:
        return self.grading[a]

    def eps(self, a: int, b: int) -> Scalar:
        return self.metric[a][b]

    def eps_bar(self, a: int, b: int) -> Scalar:
        return self.inverse_metric[a][b]

    def lowering_partners(self, a: int) -> List[Tuple[int, Scalar]]:
        """Pairs ``(b, eps_ab)`` with a nonzero metric entry in row ``a``."""
        return [(b, self.metric[a][b]) for b in range(self.dim) if self.metric[a][b]]

    def describe(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "dim": self.dim,
            "grading": "".join(str(g) for g in self.grading),
            "epsilon": self.epsilon,
            "omega": self.omega,
            "beta": format_scalar(self.beta),
            "metric": [[format_scalar(c) for c in row] for row in self.metric],
        }


def _matrix(rows: Sequence[Sequence[Any]]) -> Matrix:
    return tuple(tuple(to_scalar(c) for c in row) for row in rows)


def _invert(metric: Matrix) -> Matrix:
    dim = len(metric)
    dm = DomainMatrix([list(row) for row in metric], (dim, dim), QQ_I)
    try:
        inv = dm.inv()
    except Exception as exc:
        raise SpecError("metric is not invertible") from exc
    return tuple(tuple(inv.to_list()[i]) for i in range(dim))


def preset_spec(preset: str, epsilon: Optional[int] = None) -> AlgebraSpec:
    """Build the standard block layout for ``osp:n:2m``, ``so:N`` or ``sp:2m``.

    Indices run x^1..x^m, d^1..d^m, b^1..b^n.  With epsilon = -1 the x/d block
    is even and the b block odd; epsilon = +1 swaps the parities.  The metric
    ``[[0, 1, 0], [-1, 0, 0], [0, 0, 1/2]]`` (blockwise) and its inverse
    ``[[0, -1, 0], [1, 0, 0], [0, 0, 2]]`` serve both signs.
    """
    match = _PRESET_RE.match(str(preset))
    if not match:
        raise ConfigurationError(f"unrecognized preset: {preset!r}")
    family, first, second = match.group(1).lower(), int(match.group(2)), match.group(3)
    if family == "osp":
        if second is None:
            raise ConfigurationError("osp preset needs the form osp:n:2m")
        n, two_m = first, int(second)
        default_eps = -1
    elif family == "so":
        n, two_m, default_eps = first, 0, 1
    else:
        n, two_m, default_eps = 0, first, -1
    if two_m % 2:
        raise ConfigurationError(f"symplectic block must be even, got {two_m}")
    if n + two_m == 0:
        raise ConfigurationError("empty defining space")
    eps = default_eps if epsilon is None else int(epsilon)
    if eps not in (1, -1):
        raise ConfigurationError(f"epsilon must be +1 or -1, got {epsilon}")

    m = two_m // 2
    dim = two_m + n
    sympl_parity, orth_parity = (0, 1) if eps == -1 else (1, 0)
    grading = tuple([sympl_parity] * two_m + [orth_parity] * n)

    half = gaussian(1, 0) / 2
    metric = [[ZERO] * dim for _ in range(dim)]
    inverse = [[ZERO] * dim for _ in range(dim)]
    for j in range(m):
        metric[j][m + j] = ONE
        metric[m + j][j] = -ONE
        inverse[j][m + j] = -ONE
        inverse[m + j][j] = ONE
    for k in range(two_m, dim):
        metric[k][k] = half
        inverse[k][k] = gaussian(2)
    name = f"osp({n}|{two_m})" if family == "osp" else f"{family}({first})"
    spec = AlgebraSpec(
        grading=grading,
        epsilon=eps,
        metric=tuple(tuple(r) for r in metric),
        inverse_metric=tuple(tuple(r) for r in inverse),
        name=name,
        layout=Layout(m=m, n=n),
    )
    return validate_spec(spec)


def spec_from_mapping(data: Dict[str, Any]) -> AlgebraSpec:
    """Build a spec from a parsed configuration mapping."""
    if not isinstance(data, dict):
        raise ConfigurationError("algebra configuration must be a mapping")
    if data.get("preset"):
        return preset_spec(str(data["preset"]), data.get("epsilon"))
    missing = [key for key in ("epsilon", "grading", "metric") if key not in data]
    if missing:
        raise ConfigurationError(f"algebra configuration misses keys: {', '.join(missing)}")
    bits = str(data["grading"]).strip()
    if not bits or set(bits) - {"0", "1"}:
        raise ConfigurationError(f"grading must be a bit string, got {bits!r}")
    grading = tuple(int(b) for b in bits)
    dim = len(grading)
    flat = data["metric"]
    if isinstance(flat, str):
        flat = flat.split()
    if flat and isinstance(flat[0], (list, tuple)):
        flat = [c for row in flat for c in row]
    if len(flat) != dim * dim:
        raise ConfigurationError(f"metric needs {dim * dim} entries, got {len(flat)}")
    metric = _matrix([flat[i * dim : (i + 1) * dim] for i in range(dim)])
    if data.get("inverse_metric") is not None:
        iflat = data["inverse_metric"]
        if iflat and isinstance(iflat[0], (list, tuple)):
            iflat = [c for row in iflat for c in row]
        inverse = _matrix([iflat[i * dim : (i + 1) * dim] for i in range(dim)])
    else:
        inverse = _invert(metric)
    try:
        eps = int(data["epsilon"])
    except (TypeError, ValueError) as exc:
        raise ConfigurationError(f"epsilon must be +1 or -1, got {data['epsilon']!r}") from exc
    if eps not in (1, -1):
        raise ConfigurationError(f"epsilon must be +1 or -1, got {eps}")
    spec = AlgebraSpec(
        grading=grading,
        epsilon=eps,
        metric=metric,
        inverse_metric=inverse,
        name=str(data.get("name") or "custom"),
    )
    return validate_spec(spec)


def load_spec_file(path: str | Path) -> AlgebraSpec:
    """Load an algebra from YAML (``preset: osp:1:2`` or explicit keys)."""
    target = Path(path).expanduser()
    if not target.exists():
        raise ConfigurationError(f"algebra config file not found: {target}")
    try:
        data = yaml.safe_load(target.read_text(encoding="utf-8"))
    except yaml.YAMLError as exc:
        raise ConfigurationError(f"malformed algebra config {target}: {exc}") from exc
    logger.debug("loaded algebra config from %s", target)
    return spec_from_mapping(data or {})


def validate_spec(spec: AlgebraSpec) -> AlgebraSpec:
    """Check evenness, graded symmetry and the inverse pair; returns a flagged copy."""
    dim = spec.dim
    if spec.epsilon not in (1, -1):
        raise SpecError(f"epsilon must be +1 or -1, got {spec.epsilon}")
    for mat, label in ((spec.metric, "metric"), (spec.inverse_metric, "inverse metric")):
        if len(mat) != dim or any(len(row) != dim for row in mat):
            raise SpecError(f"{label} must be {dim}x{dim}")
    for a in range(dim):
        for b in range(dim):
            if (spec.grading[a] + spec.grading[b]) % 2 and (
                spec.metric[a][b] or spec.inverse_metric[a][b]
            ):
                raise SpecError(f"metric not even: entry ({a}, {b}) mixes parities")
    for a in range(dim):
        for b in range(dim):
            sign = spec.epsilon * (-1 if spec.grading[a] * spec.grading[b] else 1)
            if spec.metric[a][b] != spec.metric[b][a] * sign:
                raise SpecError(f"metric symmetry violated at ({a}, {b})")
    for a in range(dim):
        for d in range(dim):
            total = ZERO
            for b in range(dim):
                total += spec.metric[a][b] * spec.inverse_metric[b][d]
            if total != (ONE if a == d else ZERO):
                raise SpecError(f"inverse mismatch at ({a}, {d})")
    if spec.validated:
        return spec
    return AlgebraSpec(
        grading=spec.grading,
        epsilon=spec.epsilon,
        metric=spec.metric,
        inverse_metric=spec.inverse_metric,
        name=spec.name,
        layout=spec.layout,
        validated=True,
    )


SHIPPED_PRESETS: Tuple[Tuple[str, Optional[int]], ...] = (
    ("osp:1:2", None),
    ("osp:2:2", None),
    ("osp:3:2", None),
    ("osp:2:4", None),
    ("so:3", None),
    ("sp:2", None),
)


def shipped_specs() -> List[AlgebraSpec]:
    return [preset_spec(name, eps) for name, eps in SHIPPED_PRESETS]


__all__ = [
    "AlgebraSpec",
    "Layout",
    "SHIPPED_PRESETS",
    "load_spec_file",
    "preset_spec",
    "shipped_specs",
    "spec_from_mapping",
    "validate_spec",
]
