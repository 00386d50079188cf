import pytest

from superverge.census import (CountingPolynomial, count_direct, c_of,
                               d_polynomial, enumerate_main_sets, max_delta,
                               stratified_polynomial)
from superverge.errors import CapExceeded, TheoremViolation
from superverge.rootcomb import MainConditionSet


def test_polynomial_arithmetic():
    a = CountingPolynomial((1, 2))
    b = CountingPolynomial((0, 1, 3))
    assert (a + b).coefficients == (1, 3, 3)
    assert a.evaluate(10) == 21
    assert b.degree() == 2
    with pytest.raises(TheoremViolation):
        CountingPolynomial((1, -1)).check_nonnegative()


def test_enumerate_main_sets_counts():
    # sizes: 1 empty + |triangle| singletons + ...; cross-check by brute force
    from itertools import combinations
    from superverge.rootcomb import tri_positions
    for n in range(2, 6):
        got = list(enumerate_main_sets(n))
        brute = 0
        for r in range(len(tri_positions(n)) + 1):
            for sub in combinations(tri_positions(n), r):
                rows = [i for i, _ in sub]
                cols = [j for _, j in sub]
                if len(set(rows)) == len(rows) and len(set(cols)) == len(cols):
                    brute += 1
        assert len(got) == brute
        assert len({P.conditions for P in got}) == len(got)


def test_enumeration_cap():
    with pytest.raises(CapExceeded):
        list(enumerate_main_sets(9))


def test_golden_polynomials():
    assert d_polynomial(3).coefficients == (1, 3, 1)
    assert d_polynomial(4).coefficients == (1, 6, 7, 2)


def test_count_direct_matches_evaluation():
    for n in range(2, 6):
        d = d_polynomial(n)
        for q in (2, 3, 4, 5):
            assert d.evaluate(q - 1) == count_direct(n, q)


def test_strata_sum_to_total():
    for n in range(2, 7):
        d = d_polynomial(n)
        total = CountingPolynomial((0,))
        for delta in range(max_delta(n) + 1):
            s = stratified_polynomial(n, delta)
            s.check_nonnegative()
            total = total + s
        assert total.coefficients == d.coefficients


def test_nonnegative_coefficients_n7():
    d_polynomial(7).check_nonnegative()


def test_c_of_two_hook():
    assert c_of(MainConditionSet.of(4, [(3, 1), (4, 2)])) == 1
    assert c_of(MainConditionSet.of(4, [(4, 1)])) == 0
