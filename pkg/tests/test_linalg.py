from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from semiquiver import linalg
from oracles import leibniz_det, sympy_det, sympy_rank

small = st.integers(-6, 6)


def square(n_max=5, elems=small):
    return st.integers(1, n_max).flatmap(lambda n: st.lists(st.lists(elems, min_size=n, max_size=n),
                                                            min_size=n, max_size=n))


def rect(r_max=6, c_max=6, elems=small):
    return st.tuples(st.integers(1, r_max), st.integers(1, c_max)).flatmap(
        lambda rc: st.lists(st.lists(elems, min_size=rc[1], max_size=rc[1]), min_size=rc[0], max_size=rc[0]))


@given(square())
def test_bareiss_matches_leibniz(m):
    assert linalg.bareiss_det(m) == leibniz_det(m)


@given(square(elems=st.fractions(min_value=-3, max_value=3, max_denominator=4)))
def test_rational_det_matches_sympy(m):
    assert Fraction(linalg.det(m)) == Fraction(str(sympy_det(m)))


@given(square(), st.sampled_from([2, 3, 5, 7, 101]))
def test_modular_det(m, p):
    assert linalg.det(m, p) == leibniz_det(m) % p


@given(rect())
def test_rank_matches_sympy(m):
    assert linalg.rank(m) == sympy_rank(m)


@given(rect(), st.sampled_from([2, 3, 5]))
def test_rank_mod_p(m, p):
    assert linalg.rank(m, p) == sympy_rank(m, p)


@given(rect())
def test_nullspace_is_kernel_of_full_dimension(m):
    ns = linalg.nullspace(m)
    n = len(m[0])
    assert len(ns) == n - sympy_rank(m)
    for v in ns:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)


@given(square(n_max=4))
def test_inverse(m):
    if leibniz_det(m) == 0:
        with pytest.raises(ZeroDivisionError):
            linalg.inverse(m)
    else:
        inv = linalg.inverse(m)
        assert linalg.matmul(m, inv) == linalg.identity(len(m))


def test_empty_det_is_one():
    assert linalg.det([]) == 1
    assert linalg.det([], 5) == 1


def test_solve_inconsistent():
    assert linalg.solve([[1, 0], [0, 0]], [[0], [1]]) is None


def test_sparse_echelon_matches_rank():
    rows = [[1, 2, 0], [2, 4, 0], [0, 1, 1], [1, 3, 1]]
    e = linalg.SparseEchelon(3)
    for r in rows:
        e.add({i: v for i, v in enumerate(r)})
    assert e.rank == 2 == sympy_rank(rows)
    for v in e.nullspace():
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)
