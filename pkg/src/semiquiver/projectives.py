"""Indecomposable projectives and minimal projective presentations.

``P(x)`` has ``P(x)(y) = kQ(x, y) / I`` with the standard path basis; an
arrow ``b: y -> z`` acts by appending ``b`` and reducing.  A homomorphism
``P(y) -> P(x)`` is an element of ``kQ(x, y) / I`` (the image of ``e_y``).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from . import linalg
from .errors import PdimTooLarge
from .quiver import BoundQuiver, Path, PathElement, Quiver, euler_pairing
from .representation import Representation, _as_algebra, direct_sum_all, subrepresentation
from .semi_invariants import BlockMap


def projective(a: Union[BoundQuiver, Quiver], x, p: Optional[int] = None) -> Representation:
    a = _as_algebra(a)
    q = a.quiver
    dims = tuple(a.space(x, y).dim for y in q.vertices)
    maps = {}
    for arr in q.arrows:
        src, tgt = a.space(x, arr.source), a.space(x, arr.target)
        step = Path(arr.source, arr.target, (arr.name,))
        cols = [tgt.coordinates(u.then(step)) for u in src.basis]
        maps[arr.name] = linalg.transpose(cols, tgt.dim) if cols else [[] for _ in range(tgt.dim)]
    return Representation(a, dims, maps, p=p)


def projective_sum(a: BoundQuiver, xs: Sequence, p: Optional[int] = None) -> Representation:
    """``P(x_1) + ... + P(x_n)`` with blocks in the given order."""
    return direct_sum_all([projective(a, x, p) for x in xs], a)


def _top_vectors(m: Representation) -> list[tuple]:
    """Vectors spanning a complement of ``rad M`` at each vertex, as ``(vertex, vector)``.

    Standard vectors are preferred, so the choice is deterministic.
    """
    q = m.quiver
    out = []
    for x in q.vertices:
        n = m.dim(x)
        if not n:
            continue
        rad = []
        for arr in q.arrows_into(x):
            mat = m.matrix(arr.name)
            rad.extend([[mat[i][j] for i in range(n)] for j in range(m.dim(arr.source))])
        rad = linalg.span_basis([v for v in rad if any(v)], m.p)
        units = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
        chosen = linalg.independent_subset(rad + units, m.p)
        for k in chosen:
            if k >= len(rad):
                out.append((x, units[k - len(rad)]))
    return out


def _cover(m: Representation, gens: list[tuple]):
    """Matrices of the projective cover ``P(x_1) + ... -> M`` at each vertex."""
    a = m.algebra
    out = []
    for y in m.quiver.vertices:
        cols = []
        for x, vec in gens:
            for u in a.space(x, y).basis:
                pm = m.path_matrix(u)
                cols.append([linalg.coerce(sum(pm[i][j] * vec[j] for j in range(len(vec))), m.p)
                             for i in range(m.dim(y))])
        out.append(cols)
    return out


def _block_element(a: BoundQuiver, xs: Sequence, y, vec: Sequence) -> list[PathElement]:
    """Split a vector of ``P(x_1)(y) + ... + P(x_n)(y)`` into elements of ``kQ(x_i, y) / I``."""
    out = []
    k = 0
    for x in xs:
        sp = a.space(x, y)
        out.append(sp.element(vec[k:k + sp.dim]))
        k += sp.dim
    return out


@dataclass(frozen=True)
class Presentation:
    """``P(y_1) + ... + P(y_m) --phi--> P(x_1) + ... + P(x_n) -> V -> 0``."""
    top: tuple
    relations_top: tuple
    phi: BlockMap
    kernel_dims: tuple
    pdim_le_1: bool

    @property
    def is_mono(self) -> bool:
        return self.pdim_le_1


def minimal_presentation(v: Representation) -> Presentation:
    a = v.algebra
    q = a.quiver
    gens = _top_vectors(v)
    xs = tuple(x for x, _ in gens)
    p0 = projective_sum(a, xs, v.p)
    cover = _cover(v, gens)
    kernel_bases = []
    for i, y in enumerate(q.vertices):
        n0 = p0.dims[i]
        if not n0:
            kernel_bases.append([])
            continue
        cols = cover[i]
        mat = linalg.transpose(cols, v.dim(y)) if v.dim(y) else []
        kernel_bases.append(linalg.nullspace(mat, n0, v.p) if mat else linalg.identity(n0))
    k = subrepresentation(p0, kernel_bases)
    k_gens = _top_vectors(k)
    ys = tuple(y for y, _ in k_gens)
    entries = {}
    for j, (y, kvec) in enumerate(k_gens):
        basis = kernel_bases[q.index[y]]
        vec = [linalg.coerce(sum(c * b[t] for c, b in zip(kvec, basis)), v.p) for t in range(len(basis[0]))]
        for i, e in enumerate(_block_element(a, xs, y, vec)):
            if not e.is_zero():
                entries[(i, j)] = e
    phi = BlockMap(q, xs, ys, entries)
    p1_dims = tuple(sum(a.space(y, z).dim for y in ys) for z in q.vertices)
    return Presentation(xs, ys, phi, k.dims, p1_dims == k.dims)


def realize(a: BoundQuiver, phi: BlockMap, p: Optional[int] = None):
    """The morphism ``P(y_1) + ... -> P(x_1) + ...`` of ``phi``, with its source and target.

    Returns ``(f, source, target)``; ``f`` is a tuple of matrices in vertex order.
    """
    src = projective_sum(a, phi.cols, p)
    tgt = projective_sum(a, phi.rows, p)
    f = []
    for z in a.quiver.vertices:
        cols = []
        for j, y in enumerate(phi.cols):
            for u in a.space(y, z).basis:
                col = []
                for i, x in enumerate(phi.rows):
                    e = phi.entry(i, j).then(PathElement.from_path(u))
                    col.extend(linalg.coerce(c, p) for c in a.space(x, z).coordinates(e))
                cols.append(col)
        f.append(linalg.transpose(cols, tgt.dim(z)) if cols else [[] for _ in range(tgt.dim(z))])
    return tuple(f), src, tgt


def weight_of_module(a: Optional[BoundQuiver], v: Representation) -> tuple:
    """``theta^V = <dim V, ->``, defined when ``pdim V <= 1``."""
    if not minimal_presentation(v).pdim_le_1:
        raise PdimTooLarge("V has projective dimension > 1")
    return euler_pairing(a if a is not None else v.algebra, v.dims)
