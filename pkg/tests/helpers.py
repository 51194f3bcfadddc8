"""Random objects shared by several test modules."""
from __future__ import annotations

import random

from semiquiver import linalg
from semiquiver.quiver import BoundQuiver, Quiver
from semiquiver.representation import Representation


def random_rep(a, dims, rng: random.Random, bound: int = 2, p=None) -> Representation:
    q = a.quiver
    maps = {}
    for arr in q.arrows:
        r, c = dims[q.index[arr.target]], dims[q.index[arr.source]]
        maps[arr.name] = [[rng.randint(-bound, bound) for _ in range(c)] for _ in range(r)]
    return Representation(a, dims, maps, p=p)


def random_a3rel_rep(a, dims, rng, bound=2, p=None) -> Representation:
    """Random point of ``mod(d)`` for ``1 -a-> 2 -b-> 3`` with ``ba = 0``."""
    d1, d2, d3 = dims
    A = [[rng.randint(-bound, bound) for _ in range(d1)] for _ in range(d2)]
    left = linalg.nullspace(linalg.transpose(A, d2), d2, p) if d2 and d1 else [
        [int(i == j) for i in range(d2)] for j in range(d2)]
    B = []
    for _ in range(d3):
        coeffs = [rng.randint(-bound, bound) for _ in left]
        B.append([linalg.coerce(sum(c * v[k] for c, v in zip(coeffs, left)), p) for k in range(d2)])
    return Representation(a, dims, {"a": A, "b": B}, p=p)


def unimodular(rng: random.Random, n: int):
    g = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(3 * n):
        if n < 2:
            break
        i, j = rng.sample(range(n), 2)
        c = rng.randint(-2, 2)
        for k in range(n):
            g[i][k] += c * g[j][k]
    if n and rng.random() < 0.5:
        g[0] = [-x for x in g[0]]
    return g


def random_invertible(rng: random.Random, n: int, p=None):
    while True:
        g = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        if linalg.det(g, p) != 0:
            return g


HEREDITARY = {
    "kronecker": (["1", "2"], [("a", "1", "2"), ("b", "1", "2")]),
    "A3": (["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")]),
    "A3alt": (["1", "2", "3"], [("a", "1", "2"), ("b", "3", "2")]),
    "D4": (["c", "x", "y", "z"], [("a", "x", "c"), ("b", "y", "c"), ("e", "z", "c")]),
    "K3": (["1", "2"], [("a", "1", "2"), ("b", "1", "2"), ("c", "1", "2")]),
}


def hereditary(name: str) -> BoundQuiver:
    verts, arrows = HEREDITARY[name]
    return BoundQuiver(Quiver(verts, arrows))
