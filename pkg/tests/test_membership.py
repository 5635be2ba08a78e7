import itertools

import pytest
from hypothesis import given, settings, strategies as st

from perbeta.errors import BudgetTooSmall, PreconditionViolated
from perbeta.membership import member_nZbeta
from perbeta.poly import IntPoly, mod_project


def brute_force_member(q, m, n, r_degree):
    """Does some r with deg r <= r_degree and coefficients in [0, n) give q = r m (mod n)?"""
    target = mod_project(q, n)
    for r in itertools.product(range(n), repeat=r_degree + 1):
        if mod_project(IntPoly(r) * m, n) == target:
            return True
    return False


def test_worked_example_multiplier(worked):
    res = member_nZbeta(IntPoly.binomial(3, 1), worked, 6)
    assert res.member
    assert res.r == IntPoly([4, 3, 2])
    assert res.p == -IntPoly([2, 3, 4, 2, 1])


def test_golden_rejects_x_minus_one(golden):
    res = member_nZbeta(IntPoly.binomial(1, 0), golden, 2)
    assert not res.member and res.definitive


def test_budget_below_degree_raises(golden):
    with pytest.raises(BudgetTooSmall):
        member_nZbeta(IntPoly.binomial(5, 0), golden, 2, degree_budget=4)
    with pytest.raises(PreconditionViolated):
        member_nZbeta(IntPoly([1]), golden, 1)


def test_negative_answers_not_definitive_for_non_unit_lead(worked):
    res = member_nZbeta(IntPoly([1]), worked, 3, degree_budget=6)
    assert not res.member and not res.definitive


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["golden", "salem_like", "quad"]), st.integers(2, 12),
       st.lists(st.integers(-30, 30), min_size=1, max_size=7), st.integers(0, 40))
def test_budget_monotone(bases, name, n, coeffs, extra):
    base = bases[name]
    q = IntPoly(coeffs)
    lo = max(q.degree, 0)
    if member_nZbeta(q, base, n, lo).member:
        assert member_nZbeta(q, base, n, lo + extra).member


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["golden", "two", "salem_like"]), st.integers(2, 5),
       st.lists(st.integers(-6, 6), min_size=1, max_size=3), st.lists(st.integers(-6, 6), max_size=4))
def test_agrees_with_brute_force(bases, name, n, r, noise):
    base = bases[name]
    m = base.minpoly
    q = IntPoly(r) * m + IntPoly(noise)  # a member exactly when noise lies in the ideal
    deg_r = 4
    budget = deg_r + base.degree
    if q.degree > budget:
        return
    assert member_nZbeta(q, base, n, budget).member == brute_force_member(q, m, n, deg_r)


def test_certificate_is_exact(bases):
    base = bases["plastic"]
    q = IntPoly([5, 0, 7, 1, 1]) * base.minpoly + IntPoly([14, 7])
    res = member_nZbeta(q, base, 7)
    assert res.member
    assert q - res.p * 7 == res.r * base.minpoly
