from itertools import product

import pytest

from superverge.action import NilMatrix
from superverge.census import enumerate_main_sets
from superverge.errors import MemoryBudgetExceeded, NotAVerge
from superverge.orbits import (VergeData, classify, orbit_bfs,
                               orbit_intersection_size, regular_checksum,
                               template_of_orbit, templates_of_verge)
from superverge.rootcomb import tri_positions


def test_verge_data_validation(F2):
    v = VergeData.of(4, F2, [((3, 1), 1), ((4, 2), 1)])
    assert (v.a(), v.b()) == (2, 1)
    with pytest.raises(NotAVerge):
        VergeData.of(4, F2, [((3, 1), 0)])
    with pytest.raises(NotAVerge):
        VergeData.from_matrix(NilMatrix.of(4, F2, [((3, 1), 1), ((4, 1), 1)]))


def test_classify_examples(F2):
    z = NilMatrix.zero(4, F2)
    res = classify(z)
    assert res.is_verge and res.is_template and res.main == ()
    # verge with two hooks; its supplementary position is the leg (2,1)
    A = NilMatrix.of(4, F2, [((3, 1), 1), ((4, 2), 1)])
    res = classify(A)
    assert res.is_verge and res.is_template
    assert res.main == ((3, 1), (4, 2))
    assert res.suppl == ((2, 1),)
    # filling an arm position breaks templateness but keeps the main set
    B = NilMatrix.of(4, F2, [((3, 1), 1), ((3, 2), 1), ((4, 2), 1)])
    assert not classify(B).is_template


def test_orbit_sizes_all_verges_n4_q3(F3):
    for P in enumerate_main_sets(4):
        for vals in product(F3.units(), repeat=len(P)):
            v = VergeData.of(4, F3, list(zip(P.conditions, vals)))
            o = orbit_bfs(v.matrix(), "right")
            assert len(o) == F3.q ** v.a()
            ol = orbit_bfs(v.matrix(), "left")
            # left orbit size = q^(number of leg positions) = q^a too
            assert len(ol) == F3.q ** v.a()


def test_unique_template_per_orbit(F2):
    n = 4
    seen = set()
    for fill in product(range(2), repeat=len(tri_positions(n))):
        A = NilMatrix.of(n, F2, list(zip(tri_positions(n), fill)))
        if A.to_vec() in seen:
            continue
        o = orbit_bfs(A)
        assert not (o.members & seen)
        seen |= o.members
        t = template_of_orbit(o)  # raises if not exactly one
        assert classify(t).is_template
    assert len(seen) == 2 ** len(tri_positions(n))


def test_templates_of_verge_counts(F2, F3):
    for F in (F2, F3):
        v = VergeData.of(4, F, [((3, 1), 1), ((4, 2), 1)])
        ts = templates_of_verge(v)
        assert len(ts) == F.q ** (v.a() - v.b())
        for t in ts:
            assert classify(t).is_template
            assert classify(t).main == ((3, 1), (4, 2))


def test_intersection_equals_qb(F2):
    v = VergeData.of(5, F2, [((3, 1), 1), ((4, 2), 1), ((5, 3), 1)])
    assert orbit_intersection_size(v) == 2 ** 2  # b = 2


def test_right_orbit_members_are_arm_fillings(F3):
    v = VergeData.of(4, F3, [((4, 1), 2)])
    o = orbit_bfs(v.matrix())
    arms = {(4, 2), (4, 3)}
    for B in o.matrices():
        assert B.get((4, 1)) == 2
        assert set(B.support()) <= arms | {(4, 1)}


def test_orbit_cap(F2):
    A = NilMatrix.of(5, F2, [((5, 1), 1)])
    with pytest.raises(MemoryBudgetExceeded):
        orbit_bfs(A, "right", cap=3)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_regular_checksum_small(n, F2, F3):
    assert regular_checksum(n, F2)
    assert regular_checksum(n, F3)
