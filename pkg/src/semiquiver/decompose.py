"""Krull-Schmidt decomposition over the rationals.

For ``A = End(M)`` the semisimple quotient has dimension ``rank`` of the
trace form ``(f, g) -> tr(fg)`` on the natural module (characteristic 0).
A summand is split off with a Fitting decomposition: when the
characteristic polynomial of some ``f`` in ``A`` has two coprime factors
``q^e`` and ``r``, ``M = ker q(f)^e + ker r(f)`` as representations.  ``M``
is certified indecomposable once some ``f`` has characteristic polynomial
a power of an irreducible ``q`` with ``deg q = dim A / rad A``.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Optional

import sympy

from . import _rng, linalg
from .errors import DecompositionFailure, QuiverError
from .representation import Representation, hom_basis, subrepresentation

log = logging.getLogger(__name__)

MAX_CANDIDATES = 400
_T = sympy.Symbol("t")


def _combine(basis, coeffs, p=None):
    """``sum c_i f_i`` for morphisms given as per-vertex matrix tuples."""
    out = []
    for x in range(len(basis[0])):
        acc = [[0] * len(r) for r in basis[0][x]]
        for c, f in zip(coeffs, basis):
            if c:
                for i, row in enumerate(f[x]):
                    a = acc[i]
                    for j, v in enumerate(row):
                        if v:
                            a[j] += c * v
        out.append([[linalg.normalize(v) for v in row] for row in acc])
    return tuple(out)


def _trace_rank(basis) -> int:
    n = len(basis)
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            t = 0
            for fi, fj in zip(basis[i], basis[j]):
                if fi and fi[0]:
                    t += sum(fi[a][b] * fj[b][a] for a in range(len(fi)) for b in range(len(fi)))
            g[i][j] = g[j][i] = t
    return linalg.rank(g)


def _charpoly_factors(f) -> list[tuple]:
    """Irreducible monic factors of ``prod_x charpoly(f(x))`` over Q, with multiplicities."""
    poly = sympy.Poly(1, _T, domain="QQ")
    for mat in f:
        if mat and mat[0]:
            poly *= sympy.Matrix(mat).charpoly(_T).set_domain("QQ")
    _, factors = poly.factor_list()
    return [(q.monic(), e) for q, e in factors]


def _kernel_bases(m: Representation, f, poly: sympy.Poly) -> list[list]:
    coeffs = [linalg.normalize(Fraction(int(c.p), int(c.q))) for c in map(sympy.Rational, poly.all_coeffs())]
    out = []
    for i, mat in enumerate(f):
        n = m.dims[i]
        if not n:
            out.append([])
            continue
        out.append(linalg.nullspace(linalg.mat_pow_poly(coeffs, mat), n))
    return out


def _fitting_split(m: Representation, f, factors) -> Optional[tuple[Representation, Representation]]:
    if len(factors) < 2:
        return None
    q, e = factors[0]
    rest = sympy.Poly(1, _T, domain="QQ")
    for r, k in factors[1:]:
        rest *= r ** k
    first = subrepresentation(m, _kernel_bases(m, f, q ** e))
    second = subrepresentation(m, _kernel_bases(m, f, rest))
    if first.total_dim + second.total_dim != m.total_dim or not first.total_dim or not second.total_dim:
        raise DecompositionFailure("Fitting decomposition did not split the module")
    return first, second


def _stable_subspaces(m: Representation, basis, cap: int = 64) -> list[tuple]:
    """A pool of ``End(M)``-stable subspaces ``(vertex index, basis)`` built from the arrows."""
    q = m.quiver
    p = m.p
    seen = set()
    pool: list[tuple] = []

    def push(i, vecs):
        vecs = linalg.span_basis([v for v in vecs if any(v)], p)
        if not vecs or len(vecs) == m.dims[i]:
            return
        key = (i, tuple(map(tuple, vecs)))
        if key not in seen and len(pool) < cap:
            seen.add(key)
            pool.append((i, vecs))

    for a in q.arrows:
        s, t = q.index[a.source], q.index[a.target]
        mat = m.matrix(a.name)
        if m.dims[s] and m.dims[t]:
            push(t, linalg.transpose(mat))
            push(s, linalg.nullspace(mat, m.dims[s], p))
    # End(M)-orbits of coordinate vectors
    for i, n in enumerate(m.dims):
        for j in range(n):
            w = [1 if k == j else 0 for k in range(n)]
            push(i, [[sum(f[i][r][c] * w[c] for c in range(n)) for r in range(n)] for f in basis])
    for _ in range(2):
        snapshot = list(pool)
        for a in q.arrows:
            s, t = q.index[a.source], q.index[a.target]
            if not (m.dims[s] and m.dims[t]):
                continue
            mat = m.matrix(a.name)
            for i, vecs in snapshot:
                if i == s:
                    push(t, [[sum(mat[r][c] * v[c] for c in range(m.dims[s])) for r in range(m.dims[t])] for v in vecs])
                elif i == t:
                    # preimage of span(vecs) under mat
                    big = [row[:] + [v[r] for v in vecs] for r, row in enumerate(mat)]
                    ns = linalg.nullspace(big, m.dims[s] + len(vecs), p)
                    push(s, [v[:m.dims[s]] for v in ns])
        for x, (i, u) in enumerate(snapshot):
            for j, w in snapshot[x + 1:]:
                if i == j:
                    push(i, _intersect(u, w, m.dims[i], p))
    pool.sort(key=lambda t: len(t[1]))
    return pool


def _intersect(u, w, n, p=None):
    cols = [list(v) for v in u] + [[-c for c in v] for v in w]
    ns = linalg.nullspace(linalg.transpose(cols, len(cols)), len(cols), p)
    return [[sum(c[k] * u[k][r] for k in range(len(u))) for r in range(n)] for c in ns]


def _annihilator(m: Representation, basis, i: int, w) -> list[list]:
    """Coefficient vectors of ``{f in End(M) : f(x) w = 0}``."""
    n = m.dims[i]
    cols = [[sum(f[i][r][c] * w[c] for c in range(n)) for r in range(n)] for f in basis]
    return linalg.nullspace(linalg.transpose(cols, n), len(basis))


def _candidates(m: Representation, basis, seed: int):
    n = len(basis)
    g = _rng.stream(seed, 7)
    for k in range(n):
        yield [1 if j == k else 0 for j in range(n)]
    for _ in range(4):
        yield g.integers(-3, 4, size=n).tolist()
    for i, vecs in _stable_subspaces(m, basis):
        for w in vecs + [g.integers(-3, 4, size=len(vecs)).tolist()]:
            if len(w) != m.dims[i]:
                w = [sum(c * v[r] for c, v in zip(w, vecs)) for r in range(m.dims[i])]
            ann = _annihilator(m, basis, i, w)
            if not ann:
                continue
            for v in ann:
                yield v
            yield [sum(int(c) * v[j] for c, v in zip(g.integers(-3, 4, size=len(ann)), ann)) for j in range(n)]


def _split(m: Representation, seed: int, max_candidates: int) -> list[Representation]:
    basis = hom_basis(m, m).morphisms
    if len(basis) <= 1:
        return [m]
    semisimple = _trace_rank(basis)
    if semisimple == 1:
        return [m]
    for k, coeffs in enumerate(_candidates(m, basis, seed)):
        if k >= max_candidates:
            break
        if not any(coeffs):
            continue
        f = _combine(basis, coeffs)
        factors = _charpoly_factors(f)
        if len(factors) == 1 and factors[0][0].degree() == semisimple:
            return [m]
        parts = _fitting_split(m, f, factors)
        if parts is not None:
            log.debug("split %s into %s + %s", m.dims, parts[0].dims, parts[1].dims)
            return _split(parts[0], seed, max_candidates) + _split(parts[1], seed, max_candidates)
    raise DecompositionFailure(f"no splitting endomorphism found for dims {m.dims} "
                               f"(dim End = {len(basis)}, semisimple part {semisimple})")


def decompose(m: Representation, seed: int = 0, max_candidates: int = MAX_CANDIDATES) -> list[Representation]:
    """Indecomposable summands of ``m`` (rationals only), largest total dimension first."""
    if m.p is not None:
        raise QuiverError("decomposition needs characteristic 0")
    if m.total_dim == 0:
        return []
    parts = _split(m, seed, max_candidates)
    return sorted(parts, key=lambda r: (-r.total_dim, r.dims))


def summand_dims(m: Representation, **kw) -> list[tuple]:
    return sorted(r.dims for r in decompose(m, **kw))
