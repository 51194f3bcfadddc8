"""Ringel canonical algebras, their isotropic root and rank-one tube modules.

Vertices are named ``"0"`` (the sink), ``"inf"`` (the source) and
``"v{i}_{j}"`` for the arm vertices; the arrow ``a{i}_{j}`` is the ``j``-th
arrow on arm ``i`` counted from the sink.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import _rng, linalg
from .errors import BadParameters, BadWeights, ExceptionalPoint, QuiverError, VerificationFailed
from .quiver import BoundQuiver, PathElement, Quiver, tits_form
from .representation import DEFAULT_BOUND, Representation

ZERO = "0"
INF = "inf"


@dataclass(frozen=True)
class CanonicalSpec:
    weights: tuple
    params: tuple

    def __post_init__(self):
        w = tuple(int(m) for m in self.weights)
        lam = tuple(linalg.normalize(Fraction(x)) for x in self.params)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "params", lam)
        if len(w) < 3:
            raise BadWeights(f"need at least three arms, got {len(w)}")
        if any(m < 2 for m in w):
            raise BadWeights(f"arm weights must be at least 2, got {w}")
        if len(lam) != len(w) - 2:
            raise BadParameters(f"{len(w)} arms need {len(w) - 2} parameters, got {len(lam)}")
        if any(x == 0 for x in lam):
            raise BadParameters("parameters must be nonzero")
        if len(set(lam)) != len(lam):
            raise BadParameters(f"parameters must be pairwise distinct, got {lam}")

    def coefficient(self, i: int):
        """Scalar of arm ``i`` (1-based) in its relation; arms 1, 2 are the reference arms."""
        return self.params[i - 3]


def arm_vertex(i: int, j: int) -> str:
    return f"v{i}_{j}"


def arm_arrow(i: int, j: int) -> str:
    return f"a{i}_{j}"


def build_canonical(spec: CanonicalSpec) -> BoundQuiver:
    vertices = [ZERO]
    arrows = []
    for i, m in enumerate(spec.weights, start=1):
        vertices.extend(arm_vertex(i, j) for j in range(1, m))
        for j in range(1, m + 1):
            src = INF if j == m else arm_vertex(i, j)
            tgt = ZERO if j == 1 else arm_vertex(i, j - 1)
            arrows.append((arm_arrow(i, j), src, tgt))
    vertices.append(INF)
    q = Quiver(vertices, arrows)

    def arm(i):
        return q.path(*(arm_arrow(i, j) for j in range(spec.weights[i - 1], 0, -1)))

    relations = []
    for i in range(3, len(spec.weights) + 1):
        terms = {arm(1): 1, arm(2): spec.coefficient(i)}
        terms[arm(i)] = terms.get(arm(i), 0) - 1
        relations.append(PathElement(INF, ZERO, terms))
    return BoundQuiver(q, relations, canonical=spec)


def canonical_algebra(weights: Sequence[int], params: Sequence) -> BoundQuiver:
    return build_canonical(CanonicalSpec(tuple(weights), tuple(params)))


def tame_class(weights: Sequence[int]) -> str:
    """``domestic``, ``tubular`` or ``wild`` by comparing ``sum(1 - 1/m_i)`` with 2."""
    if len(weights) <= 2:
        return "domestic"
    s = sum(1 - Fraction(1, m) for m in weights)
    if s < 2:
        return "domestic"
    return "tubular" if s == 2 else "wild"


def _require_canonical(a: BoundQuiver) -> CanonicalSpec:
    if a.canonical is None:
        raise QuiverError("algebra was not built as a canonical algebra")
    return a.canonical


def isotropic_root(a: BoundQuiver) -> tuple:
    _require_canonical(a)
    h = (1,) * a.quiver.n
    chi = tits_form(a, h)
    if chi != 0:
        raise VerificationFailed(f"all-ones vector has chi = {chi}, not isotropic")
    return h


def arm_scalars(a: BoundQuiver, point) -> list:
    spec = _require_canonical(a)
    mu, nu = point
    return [mu, nu] + [mu + spec.coefficient(i) * nu for i in range(3, len(spec.weights) + 1)]


def is_homogeneous(a: BoundQuiver, point, p: Optional[int] = None) -> bool:
    return all(linalg.coerce(s, p) != 0 for s in arm_scalars(a, point))


def tube_module(a: BoundQuiver, point, p: Optional[int] = None) -> Representation:
    """Rank-one tube module of dimension ``h`` at the homogeneous point ``(mu : nu)``.

    All spaces are one-dimensional, every arrow is 1 except the arrow into
    the sink on arm ``i``, which carries the ``i``-th arm scalar.
    """
    spec = _require_canonical(a)
    scalars = arm_scalars(a, point)
    if not is_homogeneous(a, point, p):
        raise ExceptionalPoint(f"point {tuple(point)} is exceptional (arm scalars {scalars})")
    maps = {}
    for i, m in enumerate(spec.weights, start=1):
        for j in range(1, m + 1):
            maps[arm_arrow(i, j)] = [[scalars[i - 1] if j == 1 else 1]]
    return Representation(a, (1,) * a.quiver.n, maps, p=p)


def random_homogeneous_points(a: BoundQuiver, n: int, g, bound: int = DEFAULT_BOUND,
                              p: Optional[int] = None) -> list[tuple[int, int]]:
    """``n`` pairwise distinct homogeneous points with integer coordinates in ``[-bound, bound]``."""
    points: list[tuple[int, int]] = []
    for _ in range(10000 * max(n, 1)):
        if len(points) == n:
            return points
        mu, nu = _rng.randint(g, -bound, bound), _rng.randint(g, -bound, bound)
        if not is_homogeneous(a, (mu, nu), p):
            continue
        if any(linalg.coerce(mu * b - nu * c, p) == 0 for c, b in points):
            continue
        points.append((mu, nu))
    raise QuiverError(f"could not find {n} distinct homogeneous points with bound {bound}")


def class_LTR(x: Representation) -> str:
    _require_canonical(x.algebra)
    d0, dinf = x.dim(ZERO), x.dim(INF)
    if d0 > dinf:
        return "L"
    return "T" if d0 == dinf else "R"
