import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from semiquiver.errors import NoDimensionVector, NonSquare, PdimTooLarge, WeightMismatch
from semiquiver.quiver import PathElement, euler_pairing
from semiquiver.representation import ModuleSampler, Representation, hom_dim
from semiquiver.semi_invariants import (BlockMap, c_phi, c_V, free_presentation_vectors, phi_direct_sum,
                                        sample_phi, si_dim, weight_of)
from helpers import hereditary, random_rep
from oracles import kronecker_si_dim, leibniz_det


def kphi(q, mu, nu):
    return BlockMap(q, ("1",), ("2",), {(0, 0): PathElement("1", "2", {q.path("a"): mu, q.path("b"): nu})})


def test_weight_counting(kronecker):
    q = kronecker.quiver
    assert weight_of(BlockMap(q, ("1",), ("2",))) == (1, -1)
    assert weight_of(BlockMap(q, ("1", "2"), ("2", "1"))) == (0, 0)
    phi = kphi(q, 1, 0)
    assert weight_of(phi_direct_sum(phi, phi)) == (2, -2)


def test_c_phi_examples(kronecker):
    q = kronecker.quiver
    m = Representation(kronecker, (1, 1), {"a": [[2]], "b": [[3]]})
    assert c_phi(m, kphi(q, 1, 0)).value == 2
    assert c_phi(m, kphi(q, 5, -7)).value == 5 * 2 - 7 * 3
    with pytest.raises(NonSquare):
        c_phi(Representation(kronecker, (2, 1)), kphi(q, 1, 0))


def test_c_phi_is_det_mu_a_plus_nu_b(kronecker):
    rng = random.Random(0)
    q = kronecker.quiver
    for n in (1, 2, 3):
        m = random_rep(kronecker, (n, n), rng, 3)
        mu, nu = rng.randint(-4, 4), rng.randint(-4, 4)
        A, B = m.matrix("a"), m.matrix("b")
        expect = leibniz_det([[mu * A[i][j] + nu * B[i][j] for j in range(n)] for i in range(n)])
        assert c_phi(m, kphi(q, mu, nu)).value == expect


def test_direct_sum_with_empty_is_identity(kronecker):
    q = kronecker.quiver
    phi = kphi(q, 2, 1)
    assert phi_direct_sum(phi, BlockMap(q, (), ())) == phi


def test_c_v_kronecker(kronecker):
    v = Representation(kronecker, (1, 1), {"a": [[1]], "b": [[0]]})
    for x, y in [(2, 3), (1, 0), (0, 0), (0, 5)]:
        m = Representation(kronecker, (1, 1), {"a": [[x]], "b": [[y]]})
        val = c_V(m, v).value
        assert (val == 0) == (y == 0) == (hom_dim(v, m) > 0)
    with pytest.raises(WeightMismatch):
        c_V(Representation(kronecker, (2, 1)), v)


def test_c_v_projective_is_one(kronecker):
    from semiquiver.projectives import projective
    m = Representation(kronecker, (0, 0))
    assert c_V(m, projective(kronecker, "2")).value == 1


def test_c_v_needs_pdim_one(can222):
    top = Representation(can222, can222.quiver.unit("inf"))
    with pytest.raises(PdimTooLarge):
        c_V(Representation(can222, (0,) * 5), top)


def test_free_presentation_vectors(can222, kronecker):
    assert free_presentation_vectors(can222.quiver, (-1, 0, 0, 0, 1)) == ((2, 1, 1, 1, 1), (3, 1, 1, 1, 0))
    assert free_presentation_vectors(kronecker.quiver, (1, -1)) == ((1, 1), (0, 2))
    assert free_presentation_vectors(kronecker.quiver, (0, 0)) == ((0, 0), (0, 0))


def test_sample_phi(kronecker):
    phi = sample_phi(kronecker, (1, -1), 2, seed=3)
    assert weight_of(phi) == (2, -2)
    assert phi == sample_phi(kronecker, (1, -1), 2, seed=3)
    with pytest.raises(NoDimensionVector):
        sample_phi(kronecker, (-1, 1), 1)
    empty = sample_phi(kronecker, (0, 0), 1)
    assert empty.rows == empty.cols == ()


@settings(max_examples=25)
@given(st.sampled_from(["kronecker", "A3", "D4", "K3"]), st.integers(0, 10 ** 6))
def test_sampled_weight_matches_euler_form(name, seed):
    rng = random.Random(seed)
    a = hereditary(name)
    c = tuple(rng.randint(0, 2) for _ in a.quiver.vertices)
    theta = euler_pairing(a, c)
    try:
        phi = sample_phi(a, theta, 1, seed)
    except NoDimensionVector:
        return
    assert weight_of(phi) == theta


@pytest.mark.parametrize("n", [1, 2, 3])
def test_kronecker_si_dim_p1(kronecker, n):
    r = si_dim(ModuleSampler(kronecker, (n, n)), (1, -1), 1)
    assert r.stable and r.value == n + 1 == kronecker_si_dim(n, 1)


def test_kronecker_si_dim_p2(kronecker):
    r = si_dim(ModuleSampler(kronecker, (1, 1)), (1, -1), 2)
    assert r.value == 3 == kronecker_si_dim(1, 2)
    r = si_dim(ModuleSampler(kronecker, (2, 2)), (1, -1), 2)
    assert r.value == comb(4, 2) == kronecker_si_dim(2, 2)


def test_si_dim_zero_weight(kronecker, can222):
    assert si_dim(ModuleSampler(kronecker, (2, 2)), (0, 0), 3).value == 1
    assert si_dim(ModuleSampler(can222, (1,) * 5, "canonical-tube-sum"), (0,) * 5, 2).value == 1


def test_si_dim_monotone_in_budget(kronecker):
    s = ModuleSampler(kronecker, (2, 2))
    small = si_dim(s, (1, -1), 2, n_phi=2, n_points=2, max_budget=2)
    big = si_dim(s, (1, -1), 2, n_phi=4, n_points=4, max_budget=4)
    assert not small.stable and small.value <= big.value


def test_si_dim_zeroes_weight_off_support(kronecker):
    a = hereditary("A3")
    s = ModuleSampler(a, (1, 1, 0))
    assert si_dim(s, (1, -1, 5), 1).value == si_dim(s, (1, -1, 0), 1).value


def test_si_dim_weight_mismatch(kronecker):
    with pytest.raises(WeightMismatch):
        si_dim(ModuleSampler(kronecker, (2, 1)), (1, -1), 1)
