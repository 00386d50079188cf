import pytest

from superverge.action import GroupElement, NilMatrix
from superverge.errors import (BTooLarge, HookConnected, HookDisconnected,
                               NotClosed)
from superverge.oracle import (CycNumber, OrbitVector, apply, apply_left,
                               degree_multiset, hom_dimension,
                               no_linear_character_check,
                               pattern_group_elements, pattern_group_stats,
                               projective_stabilizer, rank, rational_rank,
                               scaled_root_idempotent)
from superverge.orbits import VergeData, orbit_bfs
from superverge.rootcomb import PatternSet


def test_cyc_arithmetic():
    p = 3
    z = CycNumber.root(p, 1)
    one = CycNumber.from_int(p, 1)
    # 1 + z + z^2 = 0
    assert (one + z + z * z).is_zero()
    # z^3 = 1
    assert z * z * z == one
    # (1+z)(1+z^2) = 1 + z + z^2 + z^3 = 1
    z2 = CycNumber.root(p, 2)
    assert (one + z) * (one + z2) == one
    # p = 2: zeta = -1
    m = CycNumber.root(2, 1)
    assert m * m == CycNumber.from_int(2, 1)


def test_rational_rank():
    assert rational_rank([[1, 2], [2, 4]]) == 1
    assert rational_rank([[1, 0], [0, 1]]) == 2
    assert rational_rank([[0, 0]]) == 0


def test_cyc_mult_matrix_consistent():
    p = 5
    x = CycNumber(p, (1, 2, 0, 3))
    y = CycNumber(p, (0, 1, 1, 0))
    m = x.mult_matrix()
    prod = x * y
    applied = tuple(sum(m[i][j] * y.coeffs[j] for j in range(p - 1))
                    for i in range(p - 1))
    assert applied == prod.coeffs


def test_orbit_vector_apply_is_action(F2):
    v = VergeData.of(4, F2, [((3, 1), 1), ((4, 2), 1)])
    A = v.matrix()
    o = orbit_bfs(A)
    one = CycNumber.from_int(2, 1)
    u = GroupElement.root(4, F2, (3, 2), 1)
    w = GroupElement.root(4, F2, (4, 3), 1)
    vec = OrbitVector.basis(o, A)
    # (vec.u).w == vec.(uw)
    assert apply(apply(vec, [(one, u)]), [(one, w)]) == \
        apply(vec, [(one, u * w)])


def test_idempotent_relation(F2):
    # q f^b is, up to the factor q, idempotent: (q f^b)(q f^b) = q (q f^b)
    v = VergeData.of(4, F2, [((3, 1), 1), ((4, 2), 1)])
    A = v.matrix()
    o = orbit_bfs(A)
    f = scaled_root_idempotent(F2, 4, (2, 1), 1)
    vec = apply(OrbitVector.basis(o, A), f)
    twice = apply(vec, f)
    assert twice == vec.scale(CycNumber.from_int(2, 2))


def test_rank_theorem_4_11(F2):
    v = VergeData.of(4, F2, [((3, 1), 1), ((4, 2), 1)])
    A = v.matrix()
    o = orbit_bfs(A)
    one = CycNumber.from_int(2, 1)
    for beta in (0, 1):
        f = scaled_root_idempotent(F2, 4, (2, 1), beta)
        vec = apply(OrbitVector.basis(o, A), f)
        span = [apply(vec, [(one, u)])
                for u in pattern_group_elements(PatternSet.full(4), F2)]
        assert rank(span) == 2  # q^(a-1)


def test_left_right_idempotent_shift(F2, F3):
    # q f^b_{ri} [A] = q [A] f^{b/sigma}_{sj} via the perp bijection
    for F in (F2, F3):
        for v1 in F.units():
            for v2 in F.units():
                v = VergeData.of(4, F, [((3, 1), v1), ((4, 2), v2)])
                from superverge.minimality import upsilon_sigma
                sigma = upsilon_sigma(v, (4, 3))
                A = v.matrix()
                o = orbit_bfs(A)
                base = OrbitVector.basis(o, A)
                for beta in F.elements():
                    lhs = apply_left(
                        base, scaled_root_idempotent(F, 4, (4, 3), beta))
                    rhs = apply(
                        base, scaled_root_idempotent(
                            F, 4, (2, 1), F.mul(beta, F.inv(sigma))))
                    assert lhs == rhs


def test_hom_dimension(F2):
    v = VergeData.of(4, F2, [((3, 1), 1), ((4, 2), 1)])
    assert hom_dimension(v) == 2  # q^b, b = 1


def test_pattern_group_stats_full_groups(F2, F3):
    s32 = pattern_group_stats(PatternSet.full(3), F2)
    assert s32["order"] == 8
    assert s32["class_count"] == 5
    assert s32["derived_support"].positions() == ((3, 1),)
    s33 = pattern_group_stats(PatternSet.full(3), F3)
    assert s33["order"] == 27 and s33["class_count"] == 11
    s42 = pattern_group_stats(PatternSet.full(4), F2)
    assert s42["order"] == 64 and s42["class_count"] == 16


def test_pattern_group_rejects_unclosed(F2):
    with pytest.raises(NotClosed):
        list(pattern_group_elements(PatternSet.of(3, [(3, 2), (2, 1)]), F2))


def test_quotient_stats(F2):
    # H = U_Lhat- / U_Lo for the two-hook verge: order q^b = 2, abelian
    from superverge.minimality import side_sets
    from superverge.rootcomb import MainConditionSet
    ss = side_sets(MainConditionSet.of(4, [(3, 1), (4, 2)]))
    stats = pattern_group_stats(ss.Lhat_minus, F2, modulo=ss.Lo)
    assert stats["order"] == 2
    assert stats["abelianization_order"] == 2
    assert stats["class_count"] == 2


def test_degree_multiset_two_hook(F2):
    v = VergeData.of(4, F2, [((3, 1), 1), ((4, 2), 1)])
    assert degree_multiset(v) == {0: 2}


def test_degree_multiset_refusals(F2):
    v = VergeData.of(5, F2, [((3, 1), 1), ((4, 2), 1), ((5, 3), 1)])
    with pytest.raises(HookConnected):
        degree_multiset(v)
    # four mutually crossing hooks: disconnected with b = 6 > 5
    big = VergeData.of(8, F2, [((5, 1), 1), ((6, 2), 1),
                               ((7, 3), 1), ((8, 4), 1)])
    with pytest.raises(BTooLarge):
        degree_multiset(big)


def test_no_linear_character_certificate(F2):
    v = VergeData.of(5, F2, [((3, 1), 1), ((4, 2), 1), ((5, 3), 1)])
    assert no_linear_character_check(v)
    v2 = VergeData.of(4, F2, [((3, 1), 1), ((4, 2), 1)])
    with pytest.raises(HookDisconnected):
        no_linear_character_check(v2)


def test_projective_stabilizer_is_UR(F2):
    from superverge.minimality import side_sets
    from superverge.rootcomb import MainConditionSet
    P = MainConditionSet.of(4, [(3, 1), (4, 2)])
    ss = side_sets(P)
    v = VergeData.of(4, F2, [((3, 1), 1), ((4, 2), 1)])
    stab = projective_stabilizer(v.matrix())
    expect = set(pattern_group_elements(ss.R, F2))
    assert stab == expect
