import pytest
from hypothesis import given, strategies as st

from perbeta.errors import InexactDivision
from perbeta.poly import IntPoly, LaurentIntPoly, geometric, mod_project, parse_coeffs, poly_mul

coeff_lists = st.lists(st.integers(-50, 50), max_size=8)
polys = coeff_lists.map(IntPoly)


def test_trailing_zeros_are_dropped():
    assert IntPoly([1, 2, 0, 0]) == IntPoly([1, 2])
    assert IntPoly([0, 0]).degree == -1
    assert not IntPoly()


def test_product_from_worked_example():
    r = IntPoly([4, 3, 2])
    m = IntPoly([3, 2, 3])
    assert poly_mul(r, m) == IntPoly([12, 17, 24, 13, 6])


def test_binomial_and_monomial():
    assert IntPoly.binomial(3, 1) == IntPoly([0, -1, 0, 1])
    assert IntPoly.monomial(2, 5) == IntPoly([0, 0, 5])


def test_parse_orders():
    assert parse_coeffs("-1,-1,1") == IntPoly([-1, -1, 1])
    assert parse_coeffs("1, -1, -1", descending=True) == IntPoly([-1, -1, 1])
    with pytest.raises(ValueError):
        parse_coeffs("1,x")


def test_str_is_descending():
    assert str(IntPoly([3, 2, 3])) == "3*x^2 + 2*x + 3"


def test_exact_division():
    m = IntPoly([3, 2, 3])
    r = IntPoly([4, 3, 2])
    assert (r * m).divmod_exact(m) == r
    with pytest.raises(InexactDivision):
        (r * m + IntPoly([1])).divmod_exact(m)


def test_compose_and_reverse():
    f = IntPoly([1, 2, 3])
    assert f.compose_power(2) == IntPoly([1, 0, 2, 0, 3])
    assert f.reverse() == IntPoly([3, 2, 1])
    assert IntPoly([0, 0, 1, 5]).valuation() == 2


def test_geometric_sum():
    assert geometric(2, 3) == IntPoly([1, 0, 1, 0, 1])


def test_mod_project_rejects_small_modulus():
    with pytest.raises(ValueError):
        mod_project(IntPoly([1]), 1)


@given(polys, polys, st.integers(2, 60))
def test_mod_project_is_a_ring_homomorphism(a, b, n):
    pa, pb = IntPoly(mod_project(a, n)), IntPoly(mod_project(b, n))
    assert mod_project(a * b, n) == mod_project(pa * pb, n)
    assert mod_project(a + b, n) == mod_project(pa + pb, n)


@given(polys, polys, polys)
def test_multiplication_laws(a, b, c):
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a * b).degree == (-1 if not a or not b else a.degree + b.degree)


@given(polys, st.integers(-3, 3))
def test_evaluation_matches_horner(a, x):
    assert a(x) == sum(c * x ** k for k, c in enumerate(a.coeffs))


@given(st.integers(-5, 5), coeff_lists, st.integers(-5, 5), coeff_lists)
def test_laurent_addition_commutes(l1, c1, l2, c2):
    a, b = LaurentIntPoly(l1, c1), LaurentIntPoly(l2, c2)
    assert a + b == b + a
    assert (a + b).l1_norm() <= a.l1_norm() + b.l1_norm()
