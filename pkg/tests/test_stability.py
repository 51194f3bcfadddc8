import random

import pytest
from hypothesis import given, settings, strategies as st

from semiquiver.errors import TooLarge
from semiquiver.representation import ModuleSampler, Representation, direct_sum
from semiquiver.stability import (count_subspaces, enumerate_subdims_ff, find_destabilizer, format_shape,
                                  hilbert_table, recognize_products, semistable_verdict, submodule_generated)
from semiquiver.semi_invariants import c_phi
from helpers import hereditary, random_a3rel_rep, random_rep
from oracles import all_subspaces_brute, subrep_dims_brute


def km(kronecker, x=1, y=2, p=None):
    return Representation(kronecker, (1, 1), {"a": [[x]], "b": [[y]]}, p=p)


def test_submodule_generated(kronecker):
    m = km(kronecker)
    assert submodule_generated(m, [("1", [1])]) == (1, 1)
    assert submodule_generated(m, [("2", [1])]) == (0, 1)
    assert submodule_generated(m, []) == (0, 0)


def test_find_destabilizer(kronecker):
    m = km(kronecker)
    assert find_destabilizer(m, (-1, 1)) == (0, 1)
    assert find_destabilizer(m, (1, -1)) is None
    assert find_destabilizer(m, (0, 0)) is None


def test_enumerate_examples(kronecker):
    assert enumerate_subdims_ff(km(kronecker, 1, 1, p=2)) == {(0, 0), (0, 1), (1, 1)}
    assert enumerate_subdims_ff(Representation(kronecker, (0, 0), p=3)) == {(0, 0)}
    semi = Representation(kronecker, (2, 1), p=3)
    assert enumerate_subdims_ff(semi) == {(i, j) for i in range(3) for j in range(2)}
    with pytest.raises(TooLarge):
        enumerate_subdims_ff(Representation(kronecker, (6, 6), p=5), cap=1000)


@pytest.mark.parametrize("n,p", [(0, 2), (1, 3), (2, 2), (2, 5), (3, 2), (3, 3)])
def test_count_subspaces(n, p):
    assert count_subspaces(n, p) == len(all_subspaces_brute(n, p))


@settings(max_examples=25)
@given(st.sampled_from(["kronecker", "A3", "A3alt", "D4"]), st.sampled_from([2, 3]), st.integers(0, 10 ** 6))
def test_enumeration_matches_brute_force(name, p, seed):
    rng = random.Random(seed)
    a = hereditary(name)
    d = tuple(rng.randint(0, 2) for _ in a.quiver.vertices)
    m = random_rep(a, d, rng, p=p)
    assert enumerate_subdims_ff(m) == subrep_dims_brute(m)


def test_enumeration_with_relations(a3rel):
    rng = random.Random(9)
    for _ in range(10):
        m = random_a3rel_rep(a3rel, tuple(rng.randint(0, 2) for _ in range(3)), rng, p=3)
        assert enumerate_subdims_ff(m) == subrep_dims_brute(m)


def test_generated_submodules_are_found_by_enumeration(kronecker):
    rng = random.Random(2)
    for _ in range(20):
        m = random_rep(kronecker, (2, 2), rng, p=5)
        subs = enumerate_subdims_ff(m)
        for x in ("1", "2"):
            for j in range(2):
                assert submodule_generated(m, [(x, [int(k == j) for k in range(2)])]) in subs


def test_verdicts(kronecker):
    m = km(kronecker)
    v = semistable_verdict(m, (1, -1))
    assert v.status == "semistable" and v.semistable
    assert c_phi(m, v.certificate).value == v.value != 0
    assert str(v).startswith("SEMISTABLE p=1 ")
    u = semistable_verdict(m, (-1, 1))
    assert u.status == "unstable" and u.destabilizer == (0, 1)
    assert str(u) == "UNSTABLE sub=0,1"
    w = semistable_verdict(m, (2, -1))
    assert w.destabilizer == (1, 1)


def test_verdict_on_decomposable(kronecker):
    # with zero maps the source simple is a subrepresentation, theta(1, 0) = 1 > 0
    m = direct_sum(Representation(kronecker, (1, 0)), Representation(kronecker, (0, 1)))
    v = semistable_verdict(m, (1, -1))
    assert v.status == "unstable" and v.destabilizer == (1, 0)


def test_recognize_products():
    assert recognize_products((1, 2, 3, 4)) == [(1,)]
    assert recognize_products((1, 4, 9, 16)) == [(1, 1)]
    assert recognize_products((1, 3, 6, 10)) == [(2,)]
    assert recognize_products((1, 1, 1)) == [()]
    assert recognize_products((1, 5, 7)) == []
    assert format_shape((1, 1)) == "[1,1] = P^1 x P^1"
    assert format_shape(()) == "[] = point"


def test_recognition_stable_under_longer_tables():
    short = recognize_products((1, 3, 6))
    assert (2,) in short
    assert recognize_products((1, 3, 6, 10, 15)) == [(2,)]


def test_hilbert_table_examples(kronecker, can222):
    t = hilbert_table(ModuleSampler(kronecker, (1, 1)), (1, -1), 2)
    assert t.values == (1, 2, 3) and t.all_stable and t.recognized == ((1,),)
    assert hilbert_table(ModuleSampler(kronecker, (1, 1)), (0, 0), 3).values == (1, 1, 1, 1)
    t = hilbert_table(ModuleSampler(can222, (1,) * 5, "canonical-tube-sum"), (-1, 0, 0, 0, 1), 2)
    assert t.values == (1, 2, 3)
    assert t.as_tsv().splitlines()[1] == "1\t2\tstable"


def test_hilbert_multiplicative_on_disjoint_supports():
    # Kronecker on vertices 1,2 and a second Kronecker on 3,4: h = product
    from semiquiver.quiver import BoundQuiver, Quiver
    q = Quiver(["1", "2", "3", "4"], [("a", "1", "2"), ("b", "1", "2"), ("c", "3", "4"), ("d", "3", "4")])
    t = hilbert_table(ModuleSampler(BoundQuiver(q), (1, 1, 1, 1)), (1, -1, 1, -1), 2)
    assert t.values == (1, 4, 9)
    assert t.recognized == ((1, 1),)
