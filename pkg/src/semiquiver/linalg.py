"""Exact dense linear algebra over the rationals and over prime fields.

Matrices are lists of rows.  Over the rationals entries are ``int`` or
``fractions.Fraction``; over ``F_p`` (``p`` given) entries are ints in
``range(p)``.  Every routine takes ``p=None`` for the rationals.

Determinants and ranks over the rationals use fraction-free (Bareiss)
elimination on integer matrices obtained by clearing row denominators.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Optional, Sequence

Matrix = list


def normalize(x):
    """Return ``x`` as an int when integral, else as a Fraction."""
    if isinstance(x, int):
        return x
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def coerce(x, p: Optional[int] = None):
    if p is None:
        return normalize(x)
    if isinstance(x, Fraction):
        return x.numerator * pow(x.denominator, -1, p) % p
    return int(x) % p


def coerce_matrix(m, p: Optional[int] = None) -> Matrix:
    return [[coerce(x, p) for x in row] for row in m]


def zeros(r: int, c: int) -> Matrix:
    return [[0] * c for _ in range(r)]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def shape(m: Sequence, cols: Optional[int] = None) -> tuple[int, int]:
    if not m:
        return 0, cols or 0
    return len(m), len(m[0])


def transpose(m: Matrix, cols: int = 0) -> Matrix:
    if not m:
        return [[] for _ in range(cols)]
    return [list(c) for c in zip(*m)]


def matmul(a: Matrix, b: Matrix, p: Optional[int] = None, inner: Optional[int] = None,
           cols: Optional[int] = None) -> Matrix:
    """Product ``a @ b``.  ``inner``/``cols`` disambiguate empty operands."""
    ra = len(a)
    cb = len(b[0]) if b else (cols or 0)
    if ra == 0:
        return []
    if not b:
        return zeros(ra, cb)
    bt = list(zip(*b))
    if p is None:
        return [[normalize(sum(x * y for x, y in zip(row, col) if x and y)) for col in bt] for row in a]
    return [[sum(x * y for x, y in zip(row, col)) % p for col in bt] for row in a]


def add(a: Matrix, b: Matrix, p: Optional[int] = None) -> Matrix:
    if p is None:
        return [[normalize(x + y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]
    return [[(x + y) % p for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(a: Matrix, s, p: Optional[int] = None) -> Matrix:
    if p is None:
        return [[normalize(s * x) for x in row] for row in a]
    return [[s * x % p for x in row] for row in a]


def is_zero(m: Matrix) -> bool:
    return all(x == 0 for row in m for x in row)


def _integer_rows(m: Matrix) -> tuple[list[list[int]], Fraction]:
    """Scale each row to integers; return rows and the product of the scales."""
    rows = []
    factor = Fraction(1)
    for row in m:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        if den == 1:
            rows.append([int(x) for x in row])
        else:
            rows.append([int(x * den) for x in row])
            factor *= den
    return rows, factor


def bareiss_det(m: list[list[int]]) -> int:
    """Determinant of a square integer matrix by Bareiss elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            if aik == 0:
                for j in range(k + 1, n):
                    ri[j] = ri[j] * akk // prev
            else:
                for j in range(k + 1, n):
                    ri[j] = (ri[j] * akk - aik * rk[j]) // prev
            ri[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def det(m: Matrix, p: Optional[int] = None):
    n = len(m)
    if n and len(m[0]) != n:
        raise ValueError(f"determinant of a non-square {n}x{len(m[0])} matrix")
    if p is None:
        rows, factor = _integer_rows(m)
        return normalize(Fraction(bareiss_det(rows)) / factor)
    a = [[x % p for x in row] for row in m]
    result = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            result = -result
        inv = pow(a[k][k], -1, p)
        result = result * a[k][k] % p
        rk = a[k]
        for i in range(k + 1, n):
            f = a[i][k] * inv % p
            if f:
                ri = a[i]
                for j in range(k, n):
                    ri[j] = (ri[j] - f * rk[j]) % p
    return result % p


def rank(m: Matrix, p: Optional[int] = None) -> int:
    if not m or not m[0]:
        return 0
    if p is not None:
        return len(rref(m, p)[1])
    a, _ = _integer_rows(m)
    nrows, ncols = len(a), len(a[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        arc = a[r][c]
        rr = a[r]
        for i in range(r + 1, nrows):
            ri = a[i]
            aic = ri[c]
            if aic == 0:
                for j in range(c + 1, ncols):
                    ri[j] = ri[j] * arc // prev
            else:
                for j in range(c + 1, ncols):
                    ri[j] = (ri[j] * arc - aic * rr[j]) // prev
            ri[c] = 0
        prev = arc
        r += 1
        if r == nrows:
            break
    return r


def rref(m: Matrix, p: Optional[int] = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns (zero rows dropped)."""
    if not m:
        return [], []
    if p is None:
        a = [[Fraction(x) for x in row] for row in m]
    else:
        a = [[x % p for x in row] for row in m]
    nrows, ncols = len(a), len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        rr = a[r]
        if p is None:
            inv = 1 / rr[c]
            a[r] = rr = [x * inv for x in rr]
        else:
            inv = pow(rr[c], -1, p)
            a[r] = rr = [x * inv % p for x in rr]
        nz = [j for j in range(c, ncols) if rr[j]]
        for i in range(nrows):
            if i != r:
                ri = a[i]
                f = ri[c]
                if f:
                    if p is None:
                        for j in nz:
                            ri[j] -= f * rr[j]
                    else:
                        for j in nz:
                            ri[j] = (ri[j] - f * rr[j]) % p
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    out = a[:r]
    if p is None:
        out = [[normalize(x) for x in row] for row in out]
    return out, pivots


def nullspace(m: Matrix, ncols: Optional[int] = None, p: Optional[int] = None) -> list[list]:
    """Basis of ``{x : m x = 0}``, one vector per free column, in column order."""
    if not m:
        n = ncols or 0
        return [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    n = len(m[0])
    red, pivots = rref(m, p)
    pivset = set(pivots)
    basis = []
    for free in range(n):
        if free in pivset:
            continue
        v = [0] * n
        v[free] = 1
        for row, pc in zip(red, pivots):
            if row[free]:
                v[pc] = normalize(-row[free]) if p is None else (-row[free]) % p
        basis.append(v)
    return basis


def independent_subset(vectors: list[list], p: Optional[int] = None) -> list[int]:
    """Indices of the greedy (first-come) maximal independent subset."""
    if not vectors:
        return []
    # pivot columns of [v_1 ... v_k] pick exactly the greedy subset
    _, pivots = rref(transpose(vectors), p)
    return pivots


def span_basis(vectors: list[list], p: Optional[int] = None) -> list[list]:
    """A reduced basis (rows of the RREF) of the span of ``vectors``."""
    if not vectors:
        return []
    red, _ = rref(vectors, p)
    return red


def solve(a: Matrix, b: Matrix, p: Optional[int] = None, ncols: Optional[int] = None):
    """One solution ``x`` of ``a x = b`` (``b`` a matrix), or ``None``."""
    rows = len(a)
    n = len(a[0]) if a else (ncols or 0)
    k = len(b[0]) if b else 0
    if rows == 0:
        return zeros(n, k)
    aug = [list(ra) + list(rb) for ra, rb in zip(a, b)]
    red, pivots = rref(aug, p)
    x = zeros(n, k)
    for row, pc in zip(red, pivots):
        if pc >= n:
            return None
        for j in range(k):
            x[pc][j] = row[n + j]
    return x


def inverse(m: Matrix, p: Optional[int] = None) -> Matrix:
    n = len(m)
    x = solve(m, identity(n), p, ncols=n)
    if x is None or (n and rank(m, p) < n):
        raise ZeroDivisionError("matrix is singular")
    return x


def block_diag(blocks: list[tuple[Matrix, int, int]]) -> Matrix:
    """Block-diagonal matrix from ``(matrix, rows, cols)`` triples."""
    total_r = sum(r for _, r, _ in blocks)
    total_c = sum(c for _, _, c in blocks)
    out = zeros(total_r, total_c)
    r0 = c0 = 0
    for m, r, c in blocks:
        for i in range(r):
            out[r0 + i][c0:c0 + c] = m[i]
        r0 += r
        c0 += c
    return out


def mat_pow_poly(coeffs: Sequence, m: Matrix, p: Optional[int] = None) -> Matrix:
    """Evaluate the polynomial with ``coeffs`` (highest degree first) at ``m``."""
    n = len(m)
    acc = zeros(n, n)
    for c in coeffs:
        acc = matmul(acc, m, p, cols=n) if n else acc
        for i in range(n):
            acc[i][i] = coerce(acc[i][i] + c, p)
    return acc


class SparseEchelon:
    """Incremental reduced echelon form of sparse rows (``{column: value}``)."""

    def __init__(self, ncols: int, p: Optional[int] = None):
        self.ncols = ncols
        self.p = p
        self.rows: dict[int, dict] = {}

    def _reduce(self, row: dict) -> dict:
        p = self.p
        row = {c: v for c, v in row.items() if v}
        changed = True
        while changed:
            changed = False
            for c in [c for c in row if c in self.rows]:
                f = row.get(c)
                if not f:
                    continue
                for cc, vv in self.rows[c].items():
                    nv = row.get(cc, 0) - f * vv
                    if p is not None:
                        nv %= p
                    if nv:
                        row[cc] = nv
                    else:
                        row.pop(cc, None)
                changed = True
        return row

    def add(self, row: dict) -> bool:
        """Insert a row; return whether it increased the rank."""
        p = self.p
        if p is None:
            row = {c: Fraction(v) for c, v in row.items() if v}
        else:
            row = {c: v % p for c, v in row.items() if v % p}
        row = self._reduce(row)
        if not row:
            return False
        pc = min(row)
        f = row[pc]
        if p is None:
            row = {c: v / f for c, v in row.items()}
        else:
            inv = pow(f, -1, p)
            row = {c: v * inv % p for c, v in row.items()}
        for other in self.rows.values():
            g = other.get(pc)
            if g:
                for cc, vv in row.items():
                    nv = other.get(cc, 0) - g * vv
                    if p is not None:
                        nv %= p
                    if nv:
                        other[cc] = nv
                    else:
                        other.pop(cc, None)
        self.rows[pc] = row
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def nullspace(self) -> list[list]:
        p = self.p
        basis = []
        for free in range(self.ncols):
            if free in self.rows:
                continue
            v = [0] * self.ncols
            v[free] = 1
            for pc, row in self.rows.items():
                f = row.get(free)
                if f:
                    v[pc] = normalize(-f) if p is None else (-f) % p
            basis.append(v)
        return basis
