from itertools import product

import pytest

from superverge.census import enumerate_main_sets
from superverge.errors import HookConnected, NotAHatPosition
from superverge.minimality import (analyze, is_hook_disconnected,
                                   is_hook_disconnected_derived,
                                   monomial_sources, perp, side_sets,
                                   upsilon_sigma, verify_upsilon)
from superverge.orbits import VergeData
from superverge.rootcomb import MainConditionSet, is_closed, tri_size

TWO_HOOK = MainConditionSet.of(4, [(3, 1), (4, 2)])
TRIPLE = MainConditionSet.of(5, [(3, 1), (4, 2), (5, 3)])


def test_side_sets_two_hook_example():
    ss = side_sets(TWO_HOOK)
    assert set(ss.Lo) == {(2, 1), (4, 1)}
    assert set(ss.L) == {(2, 1), (4, 1), (3, 1), (4, 2)}
    assert set(ss.Lhat) == {(2, 1), (4, 1), (3, 1), (4, 2), (4, 3)}
    assert set(ss.Ro) == {(4, 1), (4, 3)}
    assert set(ss.R) == {(4, 1), (4, 3), (3, 1), (4, 2)}
    assert set(ss.Rhat) == set(ss.R) | {(2, 1)}


def test_perp_bijection():
    assert perp((4, 3), TWO_HOOK) == (2, 1)
    with pytest.raises(NotAHatPosition):
        perp((4, 1), TWO_HOOK)
    ss = side_sets(TRIPLE)
    hat = (ss.Lhat - ss.L).positions()
    images = {perp(pos, TRIPLE) for pos in hat}
    assert len(images) == len(hat)
    assert set((ss.Rhat - ss.R).positions()) == images


def test_classifiers_agree_small_n():
    for n in range(2, 7):
        for P in enumerate_main_sets(n):
            assert is_hook_disconnected(P) == is_hook_disconnected_derived(P)


def test_triple_is_connected_two_hook_is_not():
    assert is_hook_disconnected(TWO_HOOK)
    assert not is_hook_disconnected(TRIPLE)


def test_analyze_two_hook(F2, F3):
    for F in (F2, F3):
        for v1 in F.units():
            for v2 in F.units():
                v = VergeData.of(4, F, [((3, 1), v1), ((4, 2), v2)])
                rep = analyze(v)
                assert (rep.a, rep.b, rep.c) == (2, 1, 1)
                assert rep.count_minimal == F.q
                assert rep.minimal_dim_exponent == 1


def test_analyze_connected_triple(F2):
    v = VergeData.of(5, F2, [((3, 1), 1), ((4, 2), 1), ((5, 3), 1)])
    rep = analyze(v)
    assert not rep.disconnected
    assert rep.count_minimal == 0
    with pytest.raises(HookConnected):
        monomial_sources(v)


def test_c_bounds_and_symmetry_all_P_n6():
    from superverge.census import c_of
    for n in range(2, 7):
        for P in enumerate_main_sets(n):
            if not is_hook_disconnected(P):
                continue
            ss = side_sets(P)
            c_left = len(ss.Lhat_minus) - len(ss.I_left)
            c_right = len(ss.Rhat_minus) - len(ss.I_right)
            assert c_left == c_right == c_of(P)
            from superverge.rootcomb import b_count
            assert 0 <= c_left <= b_count(P)


def test_upsilon_identity(F2, F3, F4):
    for F in (F2, F3, F4):
        for vals in product(F.units(), repeat=2):
            v = VergeData.of(4, F, list(zip(TWO_HOOK.conditions, vals)))
            assert verify_upsilon(v)


def test_upsilon_sigma_value(F3):
    v = VergeData.of(4, F3, [((3, 1), 2), ((4, 2), 1)])
    # sigma = A_rs / A_ij = 1 / 2 = 2 in F_3
    assert upsilon_sigma(v, (4, 3)) == F3.div(1, 2) == 2


def test_monomial_sources_two_hook(F2):
    v = VergeData.of(4, F2, [((3, 1), 1), ((4, 2), 1)])
    srcs = monomial_sources(v)
    assert len(srcs) == 2  # q^c with c = 1
    for s in srcs:
        assert is_closed(s.domain)
        # index [U : U_Rhat] = q^(a-b)
        assert tri_size(4) - len(s.domain) == 1
        bd = dict(s.beta)
        assert bd[(3, 1)] == 1 and bd[(4, 2)] == 1
    frees = sorted(dict(s.beta).get((2, 1), 0) for s in srcs)
    assert frees == [0, 1]


def test_character_value_exponent(F2):
    v = VergeData.of(4, F2, [((3, 1), 1), ((4, 2), 1)])
    s = monomial_sources(v)[0]
    assert s.value_exponent(F2, [((3, 1), 1)]) == 1
    assert s.value_exponent(F2, [((4, 3), 1)]) == 0
