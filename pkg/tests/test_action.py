import random
from itertools import product

import pytest

from superverge.action import (GroupElement, NilMatrix, ScaledIdempotent,
                               act_left_elem, act_left_root, act_right_elem,
                               act_right_root, permute_left, permute_right)
from superverge.errors import InputError
from superverge.rootcomb import tri_positions


def all_labels(n, F):
    for fill in product(range(F.q), repeat=len(tri_positions(n))):
        yield NilMatrix.of(n, F, list(zip(tri_positions(n), fill)))


def all_group(n, F):
    for fill in product(range(F.q), repeat=len(tri_positions(n))):
        yield GroupElement.of(n, F, list(zip(tri_positions(n), fill)))


def test_nilmatrix_canonical(F3):
    A = NilMatrix.of(3, F3, [((2, 1), 1), ((3, 1), 0)])
    assert A.entries == (((2, 1), 1),)
    assert A.get((3, 1)) == 0
    with pytest.raises(InputError):
        NilMatrix.of(3, F3, [((1, 1), 1)])
    with pytest.raises(InputError):
        NilMatrix.of(3, F3, [((2, 1), 3)])


def test_vec_roundtrip(F4):
    for A in all_labels(3, F4):
        assert NilMatrix.from_vec(3, F4, A.to_vec()) == A


def test_group_inverse_and_product(F3):
    rng = random.Random(7)
    for _ in range(50):
        u = GroupElement.of(4, F3, [(p, rng.randrange(3))
                                    for p in tri_positions(4)])
        assert u * u.inverse() == GroupElement.identity(4, F3)
        assert u.inverse() * u == GroupElement.identity(4, F3)


def test_factors_reproduce_element(F3, F4):
    rng = random.Random(11)
    for F in (F3, F4):
        for _ in range(30):
            u = GroupElement.of(5, F, [(p, rng.randrange(F.q))
                                       for p in tri_positions(5)])
            prod = GroupElement.identity(5, F)
            for pos, alpha in u.factors():
                prod = prod * GroupElement.root(5, F, pos, alpha)
            assert prod == u


def test_root_action_axiom_same_position(F3):
    # x_p(a) x_p(b) = x_p(a+b): acting twice equals acting by the sum
    for A in all_labels(3, F3):
        s = ScaledIdempotent.of(A)
        for pos in tri_positions(3):
            for a in range(3):
                for b in range(3):
                    two = act_right_root(act_right_root(s, pos, a), pos, b)
                    one = act_right_root(s, pos, F3.add(a, b))
                    assert two == one


def test_closed_vs_factors_right_action(F2, F3):
    for F, n in ((F2, 4), (F3, 3)):
        rng = random.Random(5)
        for _ in range(120):
            A = NilMatrix.of(n, F, [(p, rng.randrange(F.q))
                                    for p in tri_positions(n)])
            u = GroupElement.of(n, F, [(p, rng.randrange(F.q))
                                       for p in tri_positions(n)])
            s = ScaledIdempotent.of(A, rng.randrange(F.p))
            assert act_right_elem(s, u) == act_right_elem(s, u, "factors")


def test_left_action_anti_compatible(F2):
    # (u [A]) v-style mixed associativity: left and right actions commute
    rng = random.Random(3)
    n = 4
    for _ in range(60):
        A = NilMatrix.of(n, F2, [(p, rng.randrange(2))
                                 for p in tri_positions(n)])
        u = GroupElement.of(n, F2, [(p, rng.randrange(2))
                                    for p in tri_positions(n)])
        v = GroupElement.of(n, F2, [(p, rng.randrange(2))
                                    for p in tri_positions(n)])
        s = ScaledIdempotent.of(A)
        assert act_left_elem(act_right_elem(s, v), u) == \
            act_right_elem(act_left_elem(s, u), v)


def test_left_action_axiom(F3):
    # u(v[A]) = (uv)[A]
    rng = random.Random(9)
    n = 3
    for _ in range(200):
        A = NilMatrix.of(n, F3, [(p, rng.randrange(3))
                                 for p in tri_positions(n)])
        u = GroupElement.of(n, F3, [(p, rng.randrange(3))
                                    for p in tri_positions(n)])
        v = GroupElement.of(n, F3, [(p, rng.randrange(3))
                                    for p in tri_positions(n)])
        s = ScaledIdempotent.of(A)
        assert act_left_elem(act_left_elem(s, v), u) == \
            act_left_elem(s, u * v)


def test_permutation_parts_match_root_ops(F3):
    for A in all_labels(3, F3):
        for pos in tri_positions(3):
            for a in range(3):
                u = GroupElement.root(3, F3, pos, a)
                s = ScaledIdempotent.of(A)
                assert permute_right(A, u) == act_right_root(s, pos, a).matrix
                assert permute_left(A, u) == act_left_root(s, pos, a).matrix


def test_identity_acts_trivially(F4):
    e = GroupElement.identity(4, F4)
    rng = random.Random(1)
    for _ in range(20):
        A = NilMatrix.of(4, F4, [(p, rng.randrange(4))
                                 for p in tri_positions(4)])
        s = ScaledIdempotent.of(A, 1)
        assert act_right_elem(s, e) == s
        assert act_left_elem(s, e) == s
