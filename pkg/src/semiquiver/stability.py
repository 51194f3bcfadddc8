"""King semistability, subrepresentation oracles, Hilbert functions of SI rings.

``M`` is ``theta``-semistable when ``theta(dim M) = 0`` and ``theta(dim N) <= 0``
for every subrepresentation ``N``; equivalently some semi-invariant of weight
``p * theta`` is nonzero at ``M``.  Both directions are searched here with
explicit budgets, so a verdict may be ``unknown``.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from math import comb
from typing import Optional, Sequence, Union

from . import _rng, linalg
from .errors import NoDimensionVector, QuiverError, TooLarge
from .quiver import pair
from .representation import DEFAULT_BOUND, Representation, SamplerLike
from .semi_invariants import BlockMap, SIDimension, c_phi, sample_phi, si_dim

log = logging.getLogger(__name__)

SUBSPACE_CAP = 10 ** 7


def generated_subspaces(m: Representation, vectors: Sequence[tuple]) -> list[list]:
    """Per-vertex bases (RREF) of the smallest subrepresentation containing ``vectors``."""
    q = m.quiver
    spans = [linalg.SparseEchelon(n, m.p) for n in m.dims]
    kept: list[list] = [[] for _ in m.dims]
    todo = [(q.index[x], list(v)) for x, v in vectors]
    while todo:
        i, v = todo.pop()
        if not any(v) or not spans[i].add(dict((k, c) for k, c in enumerate(v) if c)):
            continue
        kept[i].append(v)
        x = q.vertices[i]
        for a in q.arrows_from(x):
            j = q.index[a.target]
            if m.dims[j]:
                mat = m.matrix(a.name)
                w = [linalg.coerce(sum(r[k] * v[k] for k in range(len(v))), m.p) for r in mat]
                todo.append((j, w))
    return [linalg.span_basis(vs, m.p) if vs else [] for vs in kept]


def submodule_generated(m: Representation, vectors: Sequence[tuple]) -> tuple:
    """Dimension vector of the subrepresentation generated by ``(vertex, vector)`` pairs."""
    return tuple(len(b) for b in generated_subspaces(m, vectors))


def _structured_generators(m: Representation):
    """Coordinate vectors, then kernel vectors of the outgoing arrows at each vertex."""
    q = m.quiver
    for x in q.vertices:
        n = m.dim(x)
        for j in range(n):
            yield [(x, [1 if k == j else 0 for k in range(n)])]
    for x in q.vertices:
        n = m.dim(x)
        outs = [a for a in q.arrows_from(x) if m.dim(a.target)]
        if not n or not outs:
            continue
        for a in outs:
            for v in linalg.nullspace(m.matrix(a.name), n, m.p):
                yield [(x, v)]
        stacked = [row for a in outs for row in m.matrix(a.name)]
        for v in linalg.nullspace(stacked, n, m.p):
            yield [(x, v)]


def find_destabilizer(m: Representation, theta: Sequence[int], budget: int = 64, seed: int = 0,
                      bound: int = DEFAULT_BOUND) -> Optional[tuple]:
    """Some ``dim N`` with ``theta(dim N) > 0``, or ``None`` (which proves nothing)."""
    theta = m.quiver.vector(theta)
    if not any(theta):
        return None
    seen = set()

    def test(gens):
        d = submodule_generated(m, gens)
        if d in seen:
            return None
        seen.add(d)
        return d if pair(theta, d) > 0 else None

    for gens in _structured_generators(m):
        d = test(gens)
        if d is not None:
            return d
    g = _rng.stream(seed, 3)
    support = [x for x in m.quiver.vertices if m.dim(x)]
    if not support:
        return None
    for k in range(budget):
        gens = []
        for _ in range(1 + k % 2):  # random vectors, then random pairs
            x = support[_rng.randint(g, 0, len(support) - 1)]
            gens.append((x, g.integers(-bound, bound + 1, size=m.dim(x)).tolist()))
        d = test(gens)
        if d is not None:
            return d
    return None


def count_subspaces(n: int, p: int) -> int:
    """Number of subspaces of ``F_p^n`` (sum of Gaussian binomials)."""
    total = 0
    for k in range(n + 1):
        num = den = 1
        for i in range(k):
            num *= p ** (n - i) - 1
            den *= p ** (i + 1) - 1
        total += num // den
    return total


def _all_subspaces(n: int, p: int) -> list[tuple]:
    """Every subspace of ``F_p^n`` as ``(dim, frozenset of all its vectors)``."""
    out = {}
    vectors = list(itertools.product(range(p), repeat=n))
    out[frozenset([tuple([0] * n)])] = 0
    frontier = [frozenset([tuple([0] * n)])]
    for k in range(1, n + 1):
        nxt = []
        for sub in frontier:
            for v in vectors:
                if v in sub:
                    continue
                bigger = frozenset(tuple((a + c * b) % p for a, b in zip(u, v)) for u in sub for c in range(p))
                if bigger not in out:
                    out[bigger] = k
                    nxt.append(bigger)
        frontier = nxt
    return [(k, s) for s, k in out.items()]


def enumerate_subdims_ff(m: Representation, cap: int = SUBSPACE_CAP) -> set:
    """Exact set of subrepresentation dimension vectors over ``F_p`` by brute force."""
    if m.p is None:
        raise QuiverError("finite-field enumeration needs a representation over F_p")
    p = m.p
    q = m.quiver
    total = 1
    for n in m.dims:
        total *= count_subspaces(n, p)
    if total > cap:
        raise TooLarge(f"{total} subspace tuples exceed the cap {cap}")
    order = [q.index[x] for x in q.order]
    subs = {i: _all_subspaces(m.dims[i], p) for i in set(order)}
    mats = {a.name: m.matrix(a.name) for a in q.arrows}
    images: dict = {}

    def image(name, v):
        key = (name, v)
        got = images.get(key)
        if got is None:
            got = tuple(sum(r[k] * v[k] for k in range(len(v))) % p for r in mats[name])
            images[key] = got
        return got

    # arrows checked once both ends are placed
    checks = {i: [] for i in order}
    placed = set()
    for i in order:
        placed.add(i)
        for a in q.arrows:
            s, t = q.index[a.source], q.index[a.target]
            if i in (s, t) and s in placed and t in placed:
                checks[i].append((a.name, s, t))
    found = set()
    choice = [None] * len(m.dims)

    def rec(k):
        if k == len(order):
            found.add(tuple(c[0] for c in choice))
            return
        i = order[k]
        for dim, sub in subs[i]:
            choice[i] = (dim, sub)
            ok = True
            for name, s, t in checks[i]:
                target = choice[t][1]
                if any(image(name, v) not in target for v in choice[s][1]):
                    ok = False
                    break
            if ok:
                rec(k + 1)
        choice[i] = None

    rec(0)
    return found


@dataclass(frozen=True)
class StabilityVerdict:
    status: str  # "semistable" | "unstable" | "unknown"
    certificate: Optional[BlockMap] = None
    p: Optional[int] = None
    value: object = None
    destabilizer: Optional[tuple] = None

    @property
    def semistable(self) -> Optional[bool]:
        return {"semistable": True, "unstable": False}.get(self.status)

    def __str__(self) -> str:
        if self.status == "semistable":
            return f"SEMISTABLE p={self.p} value={self.value} cert={self.certificate}"
        if self.status == "unstable":
            return f"UNSTABLE sub={','.join(map(str, self.destabilizer))}"
        return "UNKNOWN"


def semistable_verdict(m: Representation, theta: Sequence[int], p_max: int = 3, n_phi: int = 20, seed: int = 0,
                       budget: int = 64, bound: int = DEFAULT_BOUND) -> StabilityVerdict:
    theta = m.quiver.vector(theta)
    if pair(theta, m.dims) != 0:
        return StabilityVerdict("unstable", destabilizer=m.dims)
    supp = tuple(t if x else 0 for t, x in zip(theta, m.dims))
    for p in range(1, p_max + 1):
        for k in range(n_phi):
            try:
                phi = sample_phi(m.quiver, supp, p, _rng.derive_seed(seed, 1, p, k), bound)
            except NoDimensionVector:
                break
            v = c_phi(m, phi).value
            if v != 0:
                return StabilityVerdict("semistable", phi, p, v)
    d = find_destabilizer(m, theta, budget, seed, bound)
    if d is not None:
        return StabilityVerdict("unstable", destabilizer=d)
    return StabilityVerdict("unknown")


# -- Hilbert functions --------------------------------------------------------


@dataclass(frozen=True)
class HilbertEntry:
    p: int
    h: int
    stable: bool


@dataclass(frozen=True)
class HilbertTable:
    theta: tuple
    entries: tuple
    recognized: Optional[tuple] = None

    @property
    def values(self) -> tuple:
        return tuple(e.h for e in self.entries)

    @property
    def all_stable(self) -> bool:
        return all(e.stable for e in self.entries)

    def as_tsv(self) -> str:
        return "\n".join(f"{e.p}\t{e.h}\t{'stable' if e.stable else 'unstable'}" for e in self.entries)


def product_hilbert(shape: Sequence[int], p: int) -> int:
    out = 1
    for n in shape:
        out *= comb(n + p, n)
    return out


def recognize_products(t: Union[HilbertTable, Sequence[int]], k_max: int = 4, n_max: int = 8) -> list[tuple]:
    """All multisets ``(n_1..n_k)`` with ``h(p) = prod C(n_i + p, n_i)`` on the table.

    ``()`` stands for a point.
    """
    if isinstance(t, HilbertTable):
        if not t.all_stable:
            raise ValueError("recognition needs every table entry to be stable")
        values = t.values
    else:
        values = tuple(t)
    out = []
    for k in range(k_max + 1):
        for shape in itertools.combinations_with_replacement(range(1, n_max + 1), k):
            if all(product_hilbert(shape, p) == h for p, h in enumerate(values)):
                out.append(shape)
    return out


def format_shape(shape: Sequence[int]) -> str:
    if not shape:
        return "[] = point"
    return "[" + ",".join(map(str, shape)) + "] = " + " x ".join(f"P^{n}" for n in shape)


def hilbert_table(sampler: SamplerLike, theta: Sequence[int], p_max: int = 3, budgets: tuple = (4, 4),
                  seed: int = 0, max_budget: int = 256, bound: int = DEFAULT_BOUND,
                  recognize: bool = True) -> HilbertTable:
    """``h(p) = si_dim(p)`` for ``p = 1..p_max`` with ``h(0) = 1``."""
    n_phi, n_points = budgets
    entries = [HilbertEntry(0, 1, True)]
    theta = tuple(theta)
    for p in range(1, p_max + 1):
        r: SIDimension = si_dim(sampler, theta, p, n_phi, n_points, seed, max_budget, bound)
        entries.append(HilbertEntry(p, r.value, r.stable))
    table = HilbertTable(theta, tuple(entries))
    if recognize and table.all_stable:
        table = HilbertTable(theta, table.entries, tuple(recognize_products(table)))
    return table
