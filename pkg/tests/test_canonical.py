import random

import pytest

from semiquiver.canonical import (arm_scalars, canonical_algebra, class_LTR, isotropic_root, tame_class,
                                  tube_module)
from semiquiver.errors import BadParameters, BadWeights, ExceptionalPoint
from semiquiver.projectives import projective
from semiquiver.quiver import euler_pairing, pair, tits_form
from semiquiver.representation import Representation, check_module, hom_dim


def test_shapes(can222, can2222):
    assert (can222.quiver.n, len(can222.quiver.arrows), len(can222.relations)) == (5, 6, 1)
    assert (can2222.quiver.n, len(can2222.quiver.arrows), len(can2222.relations)) == (6, 8, 2)


def test_guards():
    with pytest.raises(BadParameters):
        canonical_algebra((2, 2, 2, 2), (2, 2))
    with pytest.raises(BadParameters):
        canonical_algebra((2, 2, 2), (0,))
    with pytest.raises(BadWeights):
        canonical_algebra((1, 2, 2), (2,))
    with pytest.raises(BadParameters):
        canonical_algebra((2, 2, 2), ())


@pytest.mark.parametrize("weights,cls", [((2, 3, 5), "domestic"), ((2, 3, 6), "tubular"), ((3, 3, 3), "tubular"),
                                         ((2, 4, 4), "tubular"), ((2, 2, 2, 2), "tubular"),
                                         ((2, 3, 7), "wild"), ((2, 2), "domestic")])
def test_tame_class(weights, cls):
    assert tame_class(weights) == cls


def test_isotropic(can222, can2222):
    for a in (can222, can2222):
        h = isotropic_root(a)
        assert tits_form(a, h) == 0
        assert pair(euler_pairing(a, h), h) == 0


def test_tube_module(can222):
    assert arm_scalars(can222, (1, 1)) == [1, 1, 3]
    m = tube_module(can222, (1, 1))
    assert check_module(can222, m)
    assert class_LTR(m) == "T"
    with pytest.raises(ExceptionalPoint):
        tube_module(can222, (1, 0))
    with pytest.raises(ExceptionalPoint):
        tube_module(can222, (2, -1))  # 2 + 2 * (-1) = 0


def test_ltr(can222):
    assert class_LTR(projective(can222, "0")) == "L"
    assert class_LTR(Representation(can222, can222.quiver.unit("inf"))) == "R"


def test_relations_hold_on_random_tube_modules(can222, can2222):
    rng = random.Random(0)
    for a in (can222, can2222):
        done = 0
        while done < 100:
            pt = (rng.randint(-9, 9), rng.randint(-9, 9))
            try:
                m = tube_module(a, pt)
            except ExceptionalPoint:
                continue
            assert check_module(a, m)
            done += 1


def test_tube_modules_are_hom_orthogonal(can222):
    rng = random.Random(1)
    for _ in range(50):
        pts = []
        while len(pts) < 2:
            pt = (rng.randint(-4, 4), rng.randint(-4, 4))
            try:
                pts.append(tube_module(can222, pt))
            except ExceptionalPoint:
                pass
        (mu1, nu1), (mu2, nu2) = [(m.matrix("a1_1")[0][0], m.matrix("a2_1")[0][0]) for m in pts]
        same = mu1 * nu2 == mu2 * nu1
        assert hom_dim(pts[0], pts[1]) == (1 if same else 0)
