from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from perbeta.errors import CertificateError, PreconditionViolated
from perbeta.fermat import (
    coprime_walk,
    combine_coprime,
    densify,
    find_witness,
    power_min_poly,
    prime_power_witness,
    walk,
)
from perbeta.membership import member_nZbeta, witness_budget
from perbeta.poly import IntPoly
from perbeta.witness import FermatWitness, certify


def test_certificate_is_checked_on_construction(worked):
    r = IntPoly([4, 3, 2])
    p = -IntPoly([2, 3, 4, 2, 1])
    w = FermatWitness(worked, 6, 3, 1, p, r)
    assert w.period == 2
    with pytest.raises(CertificateError):
        FermatWitness(worked, 6, 3, 1, p + IntPoly([1]), r)


def test_certify_swaps_and_reduces(worked):
    w = certify(worked, 6, 1, 3, -IntPoly([4, 3, 2]))
    assert (w.i, w.j) == (3, 1)
    assert w.r == IntPoly([4, 3, 2])
    with pytest.raises(CertificateError):
        certify(worked, 6, 3, 1, IntPoly([1]))


def test_modulus_below_two_rejected(golden):
    with pytest.raises(PreconditionViolated):
        find_witness(golden, 1)
    with pytest.raises(PreconditionViolated):
        certify(golden, 0, 3, 0, IntPoly([1, 1]))


def test_json_roundtrip(worked):
    w = find_witness(worked, 6)
    assert FermatWitness.from_json(w.to_json()) == w


def test_golden_walk_sequence(golden):
    steps = list(walk(golden.minpoly, 2))
    assert [s.z for s, _ in steps] == [(1, 0), (1, 1), (0, 1)]
    assert [p for _, p in steps] == [1, 1, 0]
    w = coprime_walk(golden, 2)
    assert (w.i, w.j) == (3, 0)
    assert w.p == IntPoly([0, 1])


def test_walk_refuses_non_units(worked):
    with pytest.raises(PreconditionViolated):
        coprime_walk(worked, 6)


def test_base_two_witnesses(bases):
    two = bases["two"]
    assert (find_witness(two, 3).i, find_witness(two, 3).j) == (2, 0)
    w = find_witness(two, 2)
    assert (w.i, w.j, w.p) == (2, 1, IntPoly([0, 1])) or w.period == 1


def test_worked_example_witness(worked):
    w = find_witness(worked, 6)
    assert (w.i, w.j) == (3, 1)
    assert w.r == IntPoly([4, 3, 2])
    assert w.p == -IntPoly([2, 3, 4, 2, 1])


def test_power_min_poly(worked):
    assert power_min_poly(worked, 1) == worked.minpoly
    assert power_min_poly(worked, 2) == IntPoly([9, 14, 9])


@pytest.mark.parametrize("p,ell", [(3, 1), (3, 2), (3, 3), (2, 3), (5, 1)])
def test_prime_power_recursion_without_fallback(worked, p, ell):
    w = prime_power_witness(worked, p, ell, fallback=False)
    assert w.n == p ** ell
    assert member_nZbeta(IntPoly.binomial(w.i, w.j), worked, w.n, witness_budget(w)).member


@pytest.mark.parametrize("p,ell", [(2, 1), (2, 4), (7, 2)])
def test_prime_power_quad(bases, p, ell):
    w = prime_power_witness(bases["quad"], p, ell, fallback=False)
    assert w.n == p ** ell


def test_combine_requires_coprime(golden):
    a, b = find_witness(golden, 4), find_witness(golden, 6)
    with pytest.raises(PreconditionViolated):
        combine_coprime(a, b)


def test_combine_period_divides_lcm(golden):
    a, b = find_witness(golden, 4), find_witness(golden, 9)
    w = combine_coprime(a, b)
    assert w.n == 36
    assert (a.period * b.period) % w.period == 0 or w.period % a.period == 0


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["golden", "plastic", "two", "salem_like", "quad"]), st.integers(2, 40))
def test_find_witness_passes_oracle(bases, name, n):
    base = bases[name]
    w = find_witness(base, n)
    assert w.n == n
    assert member_nZbeta(IntPoly.binomial(w.i, w.j), base, n, witness_budget(w)).member


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["golden", "plastic", "salem_like", "quad"]), st.integers(2, 40), st.sampled_from([1.5, 2, 3]))
def test_densify_bounds(bases, name, n, factor):
    base = bases[name]
    w = densify(find_witness(base, n), factor)
    assert w.p.degree < factor * w.period
    assert all(0 <= c < n for c in w.r.coeffs)
    M = base.height
    assert w.p.max_abs() <= M * (base.degree + 1)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["golden", "plastic", "two", "quad"]), st.integers(2, 30))
def test_walk_steps_bounded(bases, name, n):
    base = bases[name]
    m = base.minpoly
    if gcd(m[0] * m.lead, n) != 1:
        return
    steps = sum(1 for _ in walk(m, n))
    assert steps <= n ** base.degree
    assert coprime_walk(base, n).i == steps
