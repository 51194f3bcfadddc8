"""Determinantal semi-invariants ``c^phi(M) = det M(phi)`` and SI-space dimensions.

A :class:`BlockMap` ``phi`` has rows ``x_1..x_n`` and columns ``y_1..y_m``
with entries ``phi_ij`` in ``kQ(x_i, y_j)``; read as a map of projectives
``P(y) -> P(x)``.  Evaluated at ``M`` it gives ``M(phi): M(x) -> M(y)``
whose block ``(j, i)`` is ``M(phi_ij)``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Mapping, Sequence, Union

from . import _rng, linalg
from .errors import NoDimensionVector, NonSquare, PdimTooLarge, WeightMismatch
from .quiver import BoundQuiver, PathElement, Quiver, pair
from .representation import DEFAULT_BOUND, Representation, SamplerLike, evaluate

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class BlockMap:
    quiver: Quiver
    rows: tuple
    cols: tuple
    entries: Mapping = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        object.__setattr__(self, "cols", tuple(self.cols))
        clean = {}
        for (i, j), e in dict(self.entries).items():
            if (e.source, e.target) != (self.rows[i], self.cols[j]):
                raise ValueError(f"entry ({i},{j}) is not in kQ({self.rows[i]!r}, {self.cols[j]!r})")
            if not e.is_zero():
                clean[(i, j)] = e
        object.__setattr__(self, "entries", clean)

    def entry(self, i: int, j: int) -> PathElement:
        return self.entries.get((i, j)) or PathElement.zero(self.rows[i], self.cols[j])

    def weight(self) -> tuple:
        return weight_of(self)

    def __str__(self) -> str:
        body = "; ".join(f"[{i},{j}] {e}" for (i, j), e in sorted(self.entries.items()))
        return f"x=({','.join(map(str, self.rows))}) y=({','.join(map(str, self.cols))}) {{{body}}}"


@dataclass(frozen=True)
class SemiInvariantValue:
    value: object
    weight: tuple
    size: int  # sum d(x_i) = sum d(y_j)

    def __bool__(self) -> bool:
        return self.value != 0


def weight_of(phi: BlockMap) -> tuple:
    """``theta(e_z) = #{i : x_i = z} - #{j : y_j = z}``."""
    return tuple(phi.rows.count(v) - phi.cols.count(v) for v in phi.quiver.vertices)


def assemble(m: Representation, phi: BlockMap) -> list[list]:
    """The block matrix ``M(phi): M(x_1) + ... + M(x_n) -> M(y_1) + ... + M(y_m)``."""
    col_off, row_off = [], []
    n = 0
    for x in phi.rows:
        col_off.append(n)
        n += m.dim(x)
    r = 0
    for y in phi.cols:
        row_off.append(r)
        r += m.dim(y)
    out = linalg.zeros(r, n)
    for (i, j), e in phi.entries.items():
        dx, dy = m.dim(phi.rows[i]), m.dim(phi.cols[j])
        if not dx or not dy:
            continue
        block = evaluate(m, e)
        for a in range(dy):
            out[row_off[j] + a][col_off[i]:col_off[i] + dx] = block[a]
    return out


def c_phi(m: Representation, phi: BlockMap) -> SemiInvariantValue:
    """``det M(phi)``; requires ``sum d(x_i) = sum d(y_j)``."""
    nx = sum(m.dim(x) for x in phi.rows)
    ny = sum(m.dim(y) for y in phi.cols)
    if nx != ny:
        raise NonSquare(f"M(phi) is {ny}x{nx} for dims {m.dims}")
    return SemiInvariantValue(linalg.det(assemble(m, phi), m.p), weight_of(phi), nx)


def phi_direct_sum(phi: BlockMap, psi: BlockMap) -> BlockMap:
    """Block-diagonal ``phi + psi`` on the concatenated vertex sequences."""
    n, m = len(phi.rows), len(phi.cols)
    entries = dict(phi.entries)
    for (i, j), e in psi.entries.items():
        entries[(n + i, m + j)] = e
    return BlockMap(phi.quiver, phi.rows + psi.rows, phi.cols + psi.cols, entries)


def c_V(m: Representation, v: Representation) -> SemiInvariantValue:
    """``c^V(M)`` through a minimal projective presentation of ``V``.

    Nonzero exactly when ``Hom(V, M) = 0``.  Needs ``pdim V <= 1`` and
    ``<dim V, dim M> = 0``.
    """
    from .projectives import minimal_presentation

    pres = minimal_presentation(v)
    if not pres.pdim_le_1:
        raise PdimTooLarge("V has projective dimension > 1")
    theta = weight_of(pres.phi)
    if pair(theta, m.dims) != 0:
        raise WeightMismatch(f"theta^V(dim M) = {pair(theta, m.dims)} != 0")
    return c_phi(m, pres.phi)


def free_presentation_vectors(q: Quiver, theta: Sequence[int]) -> tuple[tuple, tuple]:
    """Multiplicities ``(c, b)`` of ``x`` and ``y`` for the weight ``theta`` over ``kQ``.

    ``c`` solves ``theta = <c, ->`` for the hereditary Euler form and ``b``
    solves ``dim P(x) - dim P(y) = c`` with free projectives.
    """
    idx = q.index
    c = [0] * q.n
    for y in q.order:
        c[idx[y]] = theta[idx[y]] + sum(c[idx[a.source]] for a in q.arrows_into(y))
    tops = [0] * q.n
    for x in q.vertices:
        cx = c[idx[x]]
        if cx:
            for z in q.vertices:
                tops[idx[z]] += cx * len(q.paths(x, z))
    rest = [t - cz for t, cz in zip(tops, c)]
    b = [0] * q.n
    for z in q.order:
        b[idx[z]] = rest[idx[z]] - sum(b[idx[y]] * len(q.paths(y, z)) for y in q.vertices if y != z)
    return tuple(c), tuple(b)


def sample_phi(q: Union[Quiver, BoundQuiver], theta: Sequence[int], p: int = 1, seed: int = 0,
               bound: int = DEFAULT_BOUND) -> BlockMap:
    """Random ``phi`` over the free path algebra with weight ``p * theta``.

    Entries get independent integer coefficients in ``[-bound, bound]`` on
    every path ``x_i -> y_j``.  Raises :class:`NoDimensionVector` when the
    multiplicity vectors have a negative entry.
    """
    if isinstance(q, BoundQuiver):
        q = q.quiver
    theta = q.vector(theta)
    c, b = free_presentation_vectors(q, tuple(p * t for t in theta))
    if min(c, default=0) < 0 or min(b, default=0) < 0:
        raise NoDimensionVector(f"weight {p}*{theta} gives c={c}, b={b}")
    rows = tuple(v for v, k in zip(q.vertices, c) for _ in range(k))
    cols = tuple(v for v, k in zip(q.vertices, b) for _ in range(k))
    g = _rng.stream(seed, 2)
    entries = {}
    for i, x in enumerate(rows):
        for j, y in enumerate(cols):
            paths = q.paths(x, y)
            if paths:
                coeffs = g.integers(-bound, bound + 1, size=len(paths)).tolist()
                entries[(i, j)] = PathElement(x, y, dict(zip(paths, coeffs)))
    return BlockMap(q, rows, cols, entries)


@dataclass(frozen=True)
class SIDimension:
    value: int
    stable: bool
    n_phi: int
    n_points: int
    history: tuple = ()

    def __int__(self) -> int:
        return self.value


def _sampler_info(sampler: SamplerLike, seed: int):
    algebra = getattr(sampler, "algebra", None)
    dims = getattr(sampler, "dims", None)
    if algebra is None or dims is None:
        m = sampler(_rng.derive_seed(seed, 2, 0))
        algebra, dims = m.algebra, m.dims
    return algebra, tuple(dims)


def si_dim(sampler: SamplerLike, theta: Sequence[int], p: int = 1, n_phi: int = 4, n_points: int = 4,
           seed: int = 0, max_budget: int = 256, bound: int = DEFAULT_BOUND) -> SIDimension:
    """Monte-Carlo dimension of the semi-invariants of weight ``p * theta``.

    Ranks the matrix ``[c^{phi_k}(M_j)]`` of random free-algebra ``phi_k``
    against sampled points ``M_j``, doubling both budgets until two
    consecutive ranks agree and are below the budgets.  The rank never
    exceeds the true dimension; ``stable=False`` flags a run that hit
    ``max_budget`` first.
    """
    algebra, dims = _sampler_info(sampler, seed)
    q = algebra.quiver
    theta = q.vector(theta)
    if pair(theta, dims) != 0:
        raise WeightMismatch(f"theta(d) = {pair(theta, dims)} != 0 for d = {dims}")
    # d-equivalence: the weight only matters on the support of d
    theta = tuple(t if x else 0 for t, x in zip(theta, dims))
    phis: list[BlockMap] = []
    points: list[Representation] = []
    vals: list[list] = []
    field_p = None
    history = []
    prev = None
    b_phi, b_pt = n_phi, n_points
    while True:
        while len(points) < b_pt:
            mod = sampler(_rng.derive_seed(seed, 2, len(points)))
            field_p = mod.p
            points.append(mod)
            for k, phi in enumerate(phis):
                vals[k].append(c_phi(mod, phi).value)
        while len(phis) < b_phi:
            phi = sample_phi(q, theta, p, _rng.derive_seed(seed, 1, len(phis)), bound)
            phis.append(phi)
            vals.append([c_phi(mod, phi).value for mod in points])
        r = linalg.rank([row[:b_pt] for row in vals[:b_phi]], field_p)
        history.append((b_phi, b_pt, r))
        log.debug("si_dim p=%d budgets=(%d,%d) rank=%d", p, b_phi, b_pt, r)
        if prev is not None and r == prev and r < min(b_phi, b_pt):
            return SIDimension(r, True, b_phi, b_pt, tuple(history))
        if max(2 * b_phi, 2 * b_pt) > max_budget:
            return SIDimension(r, False, b_phi, b_pt, tuple(history))
        prev = r
        b_phi, b_pt = 2 * b_phi, 2 * b_pt
