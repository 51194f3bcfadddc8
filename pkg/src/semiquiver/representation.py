"""Representations of bound quivers: points of the module variety ``mod(d)``.

A :class:`Representation` holds one matrix of shape ``d(t a) x d(s a)`` per
arrow ``a``, with entries in the rationals (``p=None``) or in ``F_p``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Optional, Sequence, Union

from . import _rng, linalg
from .errors import NotMultipleOfIsotropicRoot, QuiverError, ShapeMismatch, UnsupportedStrategy
from .quiver import BoundQuiver, Path, PathElement, Quiver, VectorLike

DEFAULT_BOUND = 5


def _mm(a, b, rows: int, cols: int, p=None):
    """``a @ b`` with explicit outer shape (handles zero inner dimension)."""
    if rows == 0:
        return []
    if cols == 0:
        return [[] for _ in range(rows)]
    if not b or not b[0] or not a[0]:
        return linalg.zeros(rows, cols)
    return linalg.matmul(a, b, p)


def _as_algebra(a: Union[BoundQuiver, Quiver]) -> BoundQuiver:
    return a if isinstance(a, BoundQuiver) else BoundQuiver(a)


class Representation:
    """Finite-dimensional representation of a bound quiver.

    ``maps`` sends arrow names to row-major matrices; arrows left out are
    zero.  Relations are *not* enforced here, see :func:`check_module`.
    """

    def __init__(self, algebra: Union[BoundQuiver, Quiver], dims: VectorLike,
                 maps: Optional[Mapping[str, Sequence[Sequence]]] = None, p: Optional[int] = None):
        self.algebra = _as_algebra(algebra)
        q = self.algebra.quiver
        self.dims = q.vector(dims)
        if any(x < 0 for x in self.dims):
            raise ShapeMismatch("negative dimension")
        self.p = p
        maps = dict(maps or {})
        unknown = set(maps) - {a.name for a in q.arrows}
        if unknown:
            raise ShapeMismatch(f"maps given for unknown arrows {sorted(unknown)}")
        store = {}
        for a in q.arrows:
            r, c = self.dim(a.target), self.dim(a.source)
            m = maps.get(a.name)
            if m is None:
                m = linalg.zeros(r, c) if c else [[] for _ in range(r)]
            m = [list(row) for row in m]
            if len(m) != r or any(len(row) != c for row in m):
                got = (len(m), len(m[0]) if m else 0)
                raise ShapeMismatch(f"arrow {a.name!r}: expected {r}x{c} matrix, got {got[0]}x{got[1]}")
            store[a.name] = tuple(tuple(linalg.coerce(x, p) for x in row) for row in m)
        self._maps = store
        self._path_cache: dict = {}

    @property
    def quiver(self) -> Quiver:
        return self.algebra.quiver

    @property
    def field(self) -> str:
        return "QQ" if self.p is None else f"GF({self.p})"

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def dim(self, v) -> int:
        return self.dims[self.quiver.index[v]]

    def matrix(self, arrow: str) -> list[list]:
        return [list(row) for row in self._maps[arrow]]

    @property
    def maps(self) -> dict[str, list[list]]:
        return {name: self.matrix(name) for name in self._maps}

    def path_matrix(self, path: Path) -> list[list]:
        """``V(path)``, cached per path."""
        got = self._path_cache.get(path)
        if got is None:
            n = self.dim(path.source)
            got = linalg.identity(n)
            for name in path.arrows:
                a = self.quiver.arrow(name)
                got = _mm(self.matrix(name), got, self.dim(a.target), n, self.p)
            self._path_cache[path] = got
        return got

    def __repr__(self) -> str:
        return f"Representation(dims={self.dims}, field={self.field})"

    def __eq__(self, other) -> bool:
        return (isinstance(other, Representation) and self.algebra is other.algebra and self.dims == other.dims
                and self.p == other.p and self._maps == other._maps)

    __hash__ = None


def evaluate(m: Representation, omega: Union[PathElement, Path]) -> list[list]:
    """``V(omega)``: linear extension of arrow composition; trivial paths give identities."""
    if isinstance(omega, Path):
        return [row[:] for row in m.path_matrix(omega)]
    rows, cols = m.dim(omega.target), m.dim(omega.source)
    out = linalg.zeros(rows, cols) if cols else [[] for _ in range(rows)]
    for path, c in omega.terms.items():
        pm = m.path_matrix(path)
        c = linalg.coerce(c, m.p)
        for i in range(rows):
            row = out[i]
            prow = pm[i]
            for j in range(cols):
                if prow[j]:
                    row[j] += c * prow[j]
    if m.p is None:
        return [[linalg.normalize(x) for x in row] for row in out]
    return [[x % m.p for x in row] for row in out]


def check_module(a: BoundQuiver, m: Representation) -> bool:
    """Whether every generating relation of ``a`` evaluates to zero on ``m``."""
    a = _as_algebra(a)
    if m.quiver is not a.quiver and m.quiver.vertices != a.quiver.vertices:
        raise ShapeMismatch("representation lives on a different quiver")
    return all(linalg.is_zero(evaluate(m, r)) for r in a.relations)


@dataclass(frozen=True)
class HomBasis:
    """Basis of ``Hom(V, W)``; each morphism is a tuple of matrices in vertex order."""
    source: Representation
    target: Representation
    morphisms: tuple

    def __len__(self) -> int:
        return len(self.morphisms)

    @property
    def dim(self) -> int:
        return len(self.morphisms)


def _hom_system(v: Representation, w: Representation):
    q = v.quiver
    offsets = {}
    n = 0
    for x in q.vertices:
        offsets[x] = n
        n += w.dim(x) * v.dim(x)

    def var(x, i, j):
        return offsets[x] + i * v.dim(x) + j

    rows = []
    for a in q.arrows:
        s, t = a.source, a.target
        wa, va = w.matrix(a.name), v.matrix(a.name)
        # W(a) phi(s) - phi(t) V(a) = 0, entrywise (i, j)
        for i in range(w.dim(t)):
            for j in range(v.dim(s)):
                row: dict = {}
                for k in range(w.dim(s)):
                    c = wa[i][k]
                    if c:
                        key = var(s, k, j)
                        row[key] = row.get(key, 0) + c
                for l in range(v.dim(t)):
                    c = va[l][j]
                    if c:
                        key = var(t, i, l)
                        row[key] = row.get(key, 0) - c
                if row:
                    rows.append(row)
    return rows, n, var


def hom_basis(v: Representation, w: Representation) -> HomBasis:
    """Basis of the space of morphisms ``V -> W`` (exact linear algebra)."""
    if v.quiver.vertices != w.quiver.vertices or v.p != w.p:
        raise QuiverError("representations over different quivers or fields")
    rows, n, var = _hom_system(v, w)
    ech = linalg.SparseEchelon(n, v.p)
    for row in rows:
        ech.add(row)
    morphisms = []
    for vec in ech.nullspace():
        morphisms.append(tuple(
            [[vec[var(x, i, j)] for j in range(v.dim(x))] for i in range(w.dim(x))]
            for x in v.quiver.vertices))
    return HomBasis(v, w, tuple(morphisms))


def hom_dim(v: Representation, w: Representation) -> int:
    rows, n, _ = _hom_system(v, w)
    ech = linalg.SparseEchelon(n, v.p)
    for row in rows:
        ech.add(row)
    return n - ech.rank


def end_dim(m: Representation) -> int:
    return hom_dim(m, m)


def is_morphism(v: Representation, w: Representation, f: Sequence) -> bool:
    q = v.quiver
    for a in q.arrows:
        s, t = q.index[a.source], q.index[a.target]
        lhs = _mm(w.matrix(a.name), f[s], w.dim(a.target), v.dim(a.source), v.p)
        rhs = _mm(f[t], v.matrix(a.name), w.dim(a.target), v.dim(a.source), v.p)
        if lhs != rhs:
            return False
    return True


def zero_module(a: BoundQuiver, p: Optional[int] = None) -> Representation:
    a = _as_algebra(a)
    return Representation(a, (0,) * a.quiver.n, p=p)


def direct_sum(v: Representation, w: Representation) -> Representation:
    """Block-diagonal sum: ``V`` occupies the leading coordinates at each vertex."""
    if v.quiver.vertices != w.quiver.vertices or v.p != w.p:
        raise QuiverError("direct sum of representations over different quivers or fields")
    q = v.quiver
    dims = tuple(a + b for a, b in zip(v.dims, w.dims))
    maps = {}
    for a in q.arrows:
        maps[a.name] = linalg.block_diag([
            (v.matrix(a.name), v.dim(a.target), v.dim(a.source)),
            (w.matrix(a.name), w.dim(a.target), w.dim(a.source)),
        ])
    return Representation(v.algebra, dims, maps, p=v.p)


def direct_sum_all(mods: Sequence[Representation], algebra: Optional[BoundQuiver] = None) -> Representation:
    if not mods:
        if algebra is None:
            raise QuiverError("empty direct sum needs an algebra")
        return zero_module(algebra)
    out = mods[0]
    for m in mods[1:]:
        out = direct_sum(out, m)
    return out


def act(g: Sequence, m: Representation) -> Representation:
    """Base change ``(g*M)(a) = g(t a) M(a) g(s a)^{-1}``; ``g`` is one invertible matrix per vertex."""
    q = m.quiver
    g = list(g)
    ginv = [linalg.inverse(x, m.p) if len(x) else [] for x in g]
    maps = {}
    for a in q.arrows:
        s, t = q.index[a.source], q.index[a.target]
        r, c = m.dim(a.target), m.dim(a.source)
        maps[a.name] = _mm(_mm(g[t], m.matrix(a.name), r, c, m.p), ginv[s], r, c, m.p)
    return Representation(m.algebra, m.dims, maps, p=m.p)


def orbit_dim(m: Representation) -> int:
    """Dimension of the orbit: ``sum d(x)^2 - dim End(M)``."""
    return sum(x * x for x in m.dims) - end_dim(m)


def subrepresentation(m: Representation, bases: Sequence[Sequence[Sequence]]) -> Representation:
    """Restrict ``m`` to subspaces given per vertex by a list of basis vectors.

    The subspaces must be stable under the arrows; the returned maps are in
    the coordinates of the given bases.
    """
    q = m.quiver
    p = m.p
    dims = tuple(len(b) for b in bases)
    maps = {}
    for a in q.arrows:
        s, t = q.index[a.source], q.index[a.target]
        bs, bt = bases[s], bases[t]
        if not bs:
            maps[a.name] = [[] for _ in bt]
            continue
        images = _mm(m.matrix(a.name), linalg.transpose(bs), m.dim(a.target), len(bs), p)
        if not bt:
            if any(x for row in images for x in row):
                raise QuiverError(f"subspaces are not stable under arrow {a.name!r}")
            maps[a.name] = []
            continue
        x = linalg.solve(linalg.transpose(bt), images, p, ncols=len(bt))
        if x is None:
            raise QuiverError(f"subspaces are not stable under arrow {a.name!r}")
        maps[a.name] = x
    return Representation(m.algebra, dims, maps, p=p)


def image_bases(f: Sequence, v: Representation, w: Representation) -> list[list]:
    """Per-vertex bases (RREF rows) of the image of the morphism ``f: V -> W``."""
    out = []
    for i, x in enumerate(w.quiver.vertices):
        cols = linalg.transpose(f[i]) if v.dim(x) and w.dim(x) else []
        out.append(linalg.span_basis([c for c in cols if any(c)], w.p))
    return out


def cokernel(f: Sequence, v: Representation, w: Representation) -> Representation:
    """``W / im f`` with coordinates on the standard vectors complementary to the image's pivots."""
    q = w.quiver
    p = w.p
    images = image_bases(f, v, w)
    pivots = []
    for i, x in enumerate(q.vertices):
        red = images[i]
        piv = [next(j for j, c in enumerate(row) if c) for row in red]
        pivots.append((red, piv, [j for j in range(w.dim(x)) if j not in piv]))

    def reduce(i, vec):
        red, piv, comp = pivots[i]
        vec = list(vec)
        for row, pc in zip(red, piv):
            c = vec[pc]
            if c:
                vec = [linalg.coerce(a - c * b, p) for a, b in zip(vec, row)]
        return [vec[j] for j in comp]

    dims = tuple(len(pv[2]) for pv in pivots)
    maps = {}
    for a in q.arrows:
        s, t = q.index[a.source], q.index[a.target]
        wa = w.matrix(a.name)
        cols = []
        for j in pivots[s][2]:
            col = [wa[r][j] for r in range(w.dim(a.target))]
            cols.append(reduce(t, col))
        maps[a.name] = linalg.transpose(cols, dims[t]) if cols else [[] for _ in range(dims[t])]
    return Representation(w.algebra, dims, maps, p=p)


# -- sampling ---------------------------------------------------------------

STRATEGIES = ("hereditary-uniform", "canonical-tube-sum", "explicit-sum")


def sample_module(a: BoundQuiver, d: VectorLike, strategy: str = "hereditary-uniform", seed: int = 0,
                  bound: int = DEFAULT_BOUND, summands: Sequence = (), p: Optional[int] = None) -> Representation:
    """Draw a point of ``mod(d)`` deterministically from ``seed``.

    ``hereditary-uniform`` fills every arrow matrix with integers in
    ``[-bound, bound]`` (no relations allowed); ``canonical-tube-sum`` takes
    a direct sum of ``n`` rank-one tube modules at distinct homogeneous
    points of a canonical algebra (``d = n h``); ``explicit-sum`` adds up the
    given summands, each either a representation or a callable
    ``seed -> representation``.
    """
    a = _as_algebra(a)
    d = a.quiver.vector(d)
    g = _rng.stream(seed, 0)
    if strategy == "hereditary-uniform":
        if a.relations:
            raise UnsupportedStrategy("hereditary-uniform sampling needs a quiver without relations")
        maps = {}
        for arr in a.quiver.arrows:
            maps[arr.name] = _rng.randmatrix(g, d[a.quiver.index[arr.target]], d[a.quiver.index[arr.source]], bound)
        return Representation(a, d, maps, p=p)
    if strategy == "canonical-tube-sum":
        from .canonical import isotropic_root, random_homogeneous_points, tube_module

        if a.canonical is None:
            raise UnsupportedStrategy("canonical-tube-sum needs an algebra built as a canonical algebra")
        h = isotropic_root(a)
        n = d[0] // h[0] if h[0] else 0
        if n <= 0 or tuple(n * x for x in h) != d:
            raise NotMultipleOfIsotropicRoot(f"{d} is not a positive multiple of the isotropic root {h}")
        points = random_homogeneous_points(a, n, g, bound, p)
        mods = [tube_module(a, pt, p=p) for pt in points]
        return direct_sum_all(mods)
    if strategy == "explicit-sum":
        mods = []
        for k, s in enumerate(summands):
            mods.append(s(_rng.randint(_rng.stream(seed, 1, k), 0, 2**62)) if callable(s) else s)
        out = direct_sum_all(mods, a)
        if out.dims != d:
            raise ShapeMismatch(f"summands add up to {out.dims}, expected {d}")
        return out
    raise UnsupportedStrategy(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")


@dataclass(frozen=True)
class ModuleSampler:
    """A reusable sampler of points of one component, keyed by integer seeds."""
    algebra: BoundQuiver
    dims: tuple
    strategy: str = "hereditary-uniform"
    bound: int = DEFAULT_BOUND
    summands: tuple = ()
    p: Optional[int] = None

    def __call__(self, seed: int) -> Representation:
        return sample_module(self.algebra, self.dims, self.strategy, seed, self.bound, self.summands, self.p)

    def describe(self) -> str:
        return f"{self.strategy}:d={','.join(map(str, self.dims))}:B={self.bound}:p={self.p}"


SamplerLike = Union[ModuleSampler, Callable[[int], Representation]]
