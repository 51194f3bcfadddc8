"""Quivers, paths, bound quivers, Cartan matrices and Euler forms.

Paths store their arrows in traversal order: ``Path(x, y, ("a", "b"))``
walks ``a`` first and then ``b``.  The algebra product follows the usual
convention for path algebras: in ``u * v`` the path ``v`` is walked first.

Vectors indexed by vertices (dimension vectors, weights) are plain tuples
of ints in the vertex order of the quiver as given by the caller.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping, Optional, Sequence, Union

from . import linalg
from .errors import CyclicQuiver, InvalidRelation, QuiverError

Vertex = Hashable
VectorLike = Union[Sequence[int], Mapping[Vertex, int]]


@dataclass(frozen=True)
class Arrow:
    name: str
    source: Vertex
    target: Vertex


@dataclass(frozen=True)
class Path:
    source: Vertex
    target: Vertex
    arrows: tuple = ()

    def __len__(self) -> int:
        return len(self.arrows)

    @property
    def length(self) -> int:
        return len(self.arrows)

    def then(self, other: "Path") -> "Path":
        """Walk ``self`` and then ``other``."""
        if self.target != other.source:
            raise QuiverError(f"cannot compose path ending at {self.target!r} with path starting at {other.source!r}")
        return Path(self.source, other.target, self.arrows + other.arrows)

    def __str__(self) -> str:
        if not self.arrows:
            return f"1_{self.source}"
        return ".".join(self.arrows)


def topological_order(q: "Quiver") -> list:
    """Vertices with every arrow pointing from an earlier to a later vertex.

    Among the available sources the earliest one in input order is taken, so
    the result is deterministic.  Raises :class:`CyclicQuiver` otherwise.
    """
    return _topological_order(q.vertices, q.arrows)


def _topological_order(vertices, arrows) -> list:
    indeg = {v: 0 for v in vertices}
    for a in arrows:
        indeg[a.target] += 1
    order = []
    remaining = list(vertices)
    while remaining:
        for v in remaining:
            if indeg[v] == 0:
                break
        else:
            raise CyclicQuiver(f"oriented cycle through {remaining!r}")
        remaining.remove(v)
        order.append(v)
        for a in arrows:
            if a.source == v:
                indeg[a.target] -= 1
    return order


class Quiver:
    """A finite quiver without oriented cycles."""

    def __init__(self, vertices: Iterable[Vertex], arrows: Iterable):
        self.vertices = tuple(vertices)
        self.arrows = tuple(a if isinstance(a, Arrow) else Arrow(*a) for a in arrows)
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError("vertex identifiers must be unique")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise QuiverError("arrow identifiers must be unique")
        self.index = {v: i for i, v in enumerate(self.vertices)}
        for a in self.arrows:
            if a.source not in self.index or a.target not in self.index:
                raise QuiverError(f"arrow {a.name!r} has an unknown endpoint")
        self._arrow = {a.name: a for a in self.arrows}
        self._arrow_index = {a.name: i for i, a in enumerate(self.arrows)}
        self.order = _topological_order(self.vertices, self.arrows)
        self._paths: dict = {}

    def __repr__(self) -> str:
        return f"Quiver(vertices={list(self.vertices)!r}, arrows={len(self.arrows)})"

    @property
    def n(self) -> int:
        return len(self.vertices)

    def arrow(self, name: str) -> Arrow:
        return self._arrow[name]

    def arrows_into(self, v) -> list[Arrow]:
        return [a for a in self.arrows if a.target == v]

    def arrows_from(self, v) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def path(self, *names: str, source=None) -> Path:
        """Path from arrow names in traversal order; ``source`` for a trivial path."""
        if not names:
            return Path(source, source, ())
        p = Path(self._arrow[names[0]].source, self._arrow[names[0]].source)
        for nm in names:
            a = self._arrow[nm]
            p = p.then(Path(a.source, a.target, (nm,)))
        return p

    def path_key(self, p: Path) -> tuple:
        return (len(p), tuple(self._arrow_index[a] for a in p.arrows))

    def paths(self, x, y) -> list[Path]:
        """All paths from ``x`` to ``y`` in degree-lexicographic order."""
        key = (x, y)
        if key not in self._paths:
            found = []

            def walk(v, acc):
                if v == y:
                    found.append(Path(x, y, tuple(acc)))
                for a in self.arrows:
                    if a.source == v:
                        acc.append(a.name)
                        walk(a.target, acc)
                        acc.pop()

            walk(x, [])
            found.sort(key=self.path_key)
            self._paths[key] = found
        return self._paths[key]

    def vector(self, d: VectorLike) -> tuple[int, ...]:
        """Normalise a sequence or vertex-keyed mapping to a tuple in vertex order."""
        if isinstance(d, Mapping):
            unknown = set(d) - set(self.vertices)
            if unknown:
                raise QuiverError(f"unknown vertices {sorted(map(str, unknown))}")
            return tuple(int(d.get(v, 0)) for v in self.vertices)
        d = tuple(int(x) for x in d)
        if len(d) != self.n:
            raise QuiverError(f"vector of length {len(d)} for a quiver with {self.n} vertices")
        return d

    def unit(self, v) -> tuple[int, ...]:
        return tuple(1 if w == v else 0 for w in self.vertices)


class PathElement:
    """A linear combination of parallel paths from ``source`` to ``target``."""

    __slots__ = ("source", "target", "terms")

    def __init__(self, source, target, terms: Optional[Mapping[Path, object]] = None):
        self.source = source
        self.target = target
        clean = {}
        for p, c in (terms or {}).items():
            if p.source != source or p.target != target:
                raise QuiverError(f"path {p} is not parallel to {source!r}->{target!r}")
            c = linalg.normalize(c)
            if c != 0:
                clean[p] = clean.get(p, 0) + c
        self.terms = {p: c for p, c in clean.items() if c != 0}

    @classmethod
    def from_path(cls, p: Path, coeff=1) -> "PathElement":
        return cls(p.source, p.target, {p: coeff})

    @classmethod
    def zero(cls, source, target) -> "PathElement":
        return cls(source, target)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "PathElement") -> "PathElement":
        if (self.source, self.target) != (other.source, other.target):
            raise QuiverError("adding non-parallel path elements")
        t = dict(self.terms)
        for p, c in other.terms.items():
            t[p] = t.get(p, 0) + c
        return PathElement(self.source, self.target, t)

    def __neg__(self) -> "PathElement":
        return PathElement(self.source, self.target, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other: "PathElement") -> "PathElement":
        return self + (-other)

    def scaled(self, s) -> "PathElement":
        return PathElement(self.source, self.target, {p: s * c for p, c in self.terms.items()})

    def then(self, other: "PathElement") -> "PathElement":
        """Walk ``self`` first, then ``other`` (bilinear extension)."""
        if self.target != other.source:
            raise QuiverError("composing non-composable path elements")
        t: dict = {}
        for p, c in self.terms.items():
            for q, d in other.terms.items():
                pq = p.then(q)
                t[pq] = t.get(pq, 0) + c * d
        return PathElement(self.source, other.target, t)

    def __mul__(self, other: "PathElement") -> "PathElement":
        # algebra convention: other is walked first
        return other.then(self)

    def __eq__(self, other) -> bool:
        return (isinstance(other, PathElement) and (self.source, self.target) == (other.source, other.target)
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.source, self.target, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"PathElement({self})"

    def __str__(self) -> str:
        if not self.terms:
            return f"0[{self.source}->{self.target}]"
        return " + ".join(f"{c}*{p}" for p, c in self.terms.items())


class PathSpace:
    """``kQ(x, y)`` modulo the ideal, with a fixed basis of standard paths.

    The ideal part is row-reduced with columns in *decreasing* path order,
    so pivots are the largest paths and the basis consists of the smaller
    paths left over.
    """

    def __init__(self, quiver: Quiver, x, y, ideal_vectors: list[list]):
        self.x, self.y = x, y
        self.paths = quiver.paths(x, y)
        self.position = {p: i for i, p in enumerate(self.paths)}
        m = len(self.paths)
        rev = [list(reversed(v)) for v in ideal_vectors]
        red, piv = linalg.rref(rev) if rev else ([], [])
        # back to increasing column indices
        self._rows = [(m - 1 - pc, list(reversed(row))) for row, pc in zip(red, piv)]
        pivots = {pc for pc, _ in self._rows}
        self.basis_index = [i for i in range(m) if i not in pivots]
        self.basis = [self.paths[i] for i in self.basis_index]
        self.dim = len(self.basis)

    def coordinates(self, element: Union[PathElement, Path]) -> list:
        """Coordinates of the class of ``element`` in the standard basis."""
        if isinstance(element, Path):
            element = PathElement.from_path(element)
        v = [0] * len(self.paths)
        for p, c in element.terms.items():
            v[self.position[p]] = c
        for pc, row in self._rows:
            f = v[pc]
            if f:
                v = [linalg.normalize(a - f * b) for a, b in zip(v, row)]
        return [v[i] for i in self.basis_index]

    def in_ideal(self, element: PathElement) -> bool:
        return all(c == 0 for c in self.coordinates(element))

    def element(self, coords: Sequence) -> PathElement:
        return PathElement(self.x, self.y, {p: c for p, c in zip(self.basis, coords)})


class BoundQuiver:
    """An acyclic quiver with relations generating an admissible ideal.

    Relations must be nonzero combinations of parallel paths of length at
    least two, none of them lying in the ideal generated by the others.
    """

    def __init__(self, quiver: Quiver, relations: Iterable[PathElement] = (), *, canonical=None):
        self.quiver = quiver
        self.relations = tuple(relations)
        self.canonical = canonical
        self._spaces: dict = {}
        self._cartan = None
        self._cartan_inv = None
        for r in self.relations:
            if r.is_zero():
                raise InvalidRelation("zero relation")
            if r.source not in quiver.index or r.target not in quiver.index:
                raise InvalidRelation(f"relation {r} has unknown endpoints")
            for p in r.terms:
                for a in p.arrows:
                    if a not in quiver._arrow:
                        raise InvalidRelation(f"relation {r} uses unknown arrow {a!r}")
                if len(p) < 2:
                    raise InvalidRelation(f"relation {r} has a term of length {len(p)} < 2")
        for k, r in enumerate(self.relations):
            others = self.relations[:k] + self.relations[k + 1:]
            vecs = _ideal_vectors(quiver, others, r.source, r.target)
            space = PathSpace(quiver, r.source, r.target, vecs)
            if space.in_ideal(r):
                raise InvalidRelation(f"relation {r} lies in the ideal generated by the others")

    @property
    def vertices(self):
        return self.quiver.vertices

    @property
    def is_hereditary(self) -> bool:
        return not self.relations

    def __repr__(self) -> str:
        return f"BoundQuiver({self.quiver!r}, relations={len(self.relations)})"

    def space(self, x, y) -> PathSpace:
        key = (x, y)
        if key not in self._spaces:
            self._spaces[key] = PathSpace(self.quiver, x, y, _ideal_vectors(self.quiver, self.relations, x, y))
        return self._spaces[key]

    def cartan(self) -> list[list[int]]:
        if self._cartan is None:
            vs = self.vertices
            self._cartan = [[self.space(x, y).dim for y in vs] for x in vs]
        return [row[:] for row in self._cartan]

    def cartan_inverse(self) -> list[list[int]]:
        if self._cartan_inv is None:
            inv = linalg.inverse(self.cartan())
            self._cartan_inv = [[int(x) for x in row] for row in inv]
        return [row[:] for row in self._cartan_inv]


def _ideal_vectors(quiver: Quiver, relations, x, y) -> list[list]:
    """Coordinate vectors of all ``w . r . w'`` lying in ``kQ(x, y)``."""
    paths = quiver.paths(x, y)
    if not paths:
        return []
    pos = {p: i for i, p in enumerate(paths)}
    vecs = []
    for r in relations:
        for before in quiver.paths(x, r.source):
            for after in quiver.paths(r.target, y):
                v = [0] * len(paths)
                for p, c in r.terms.items():
                    v[pos[before.then(p).then(after)]] += c
                vecs.append(v)
    return vecs


def path_space_basis(a: BoundQuiver, x, y) -> list[PathElement]:
    """Standard-path representatives of a basis of ``kQ(x, y)/I``."""
    return [PathElement.from_path(p) for p in a.space(x, y).basis]


def cartan_matrix(a: BoundQuiver) -> list[list[int]]:
    """``C[x][y] = dim kQ(x,y)/I``; row ``x`` is the dimension vector of ``P(x)``."""
    return a.cartan()


def euler_form(a: BoundQuiver, d: VectorLike, e: VectorLike) -> int:
    """Euler form ``d^T C^{-1} e``, so that ``<dim P(x), e> = e(x)``."""
    d = a.quiver.vector(d)
    e = a.quiver.vector(e)
    cinv = a.cartan_inverse()
    n = len(d)
    return sum(d[i] * cinv[i][j] * e[j] for i in range(n) if d[i] for j in range(n) if e[j])


def euler_pairing(a: BoundQuiver, d: VectorLike) -> tuple[int, ...]:
    """The weight ``<d, ->`` as a vector of values on the unit vectors."""
    d = a.quiver.vector(d)
    cinv = a.cartan_inverse()
    n = len(d)
    return tuple(sum(d[i] * cinv[i][j] for i in range(n)) for j in range(n))


def tits_form(a: BoundQuiver, d: VectorLike) -> int:
    return euler_form(a, d, d)


def support(q: Quiver, d: Sequence[int]) -> list:
    return [v for v, x in zip(q.vertices, d) if x]


def is_connected(q: Quiver, d: Sequence[int]) -> bool:
    """Whether the full subquiver on the support of ``d`` is connected (empty: False)."""
    supp = set(support(q, d))
    if not supp:
        return False
    start = next(iter(supp))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for a in q.arrows:
            for u, w in ((a.source, a.target), (a.target, a.source)):
                if u == v and w in supp and w not in seen:
                    seen.add(w)
                    stack.append(w)
    return seen == supp


@dataclass(frozen=True)
class RootClass:
    kind: str  # zero | not_root | root | isotropic_root
    chi: int
    connected: bool
    sincere: bool

    @property
    def is_root(self) -> bool:
        return self.kind in ("root", "isotropic_root")


def classify_dimvector(a: BoundQuiver, d: VectorLike) -> RootClass:
    d = a.quiver.vector(d)
    if any(x < 0 for x in d):
        raise QuiverError("dimension vectors have nonnegative entries")
    chi = tits_form(a, d)
    connected = is_connected(a.quiver, d)
    sincere = all(d)
    if not any(d):
        kind = "zero"
    elif connected and chi in (0, 1):
        kind = "isotropic_root" if chi == 0 else "root"
    else:
        kind = "not_root"
    return RootClass(kind, chi, connected, sincere)


def pair(theta: Sequence[int], d: Sequence[int]) -> int:
    """``theta(d) = sum_x theta(x) d(x)``."""
    return sum(t * x for t, x in zip(theta, d))
