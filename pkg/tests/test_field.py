from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from perbeta.errors import DegenerateInput, NonInvertible, ZeroInversion
from perbeta.field import FieldElement, check_base, field_inv, field_reduce, power_vanishing_poly
from perbeta.poly import IntPoly

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=20)


def test_golden_relation(golden):
    b = FieldElement.beta_power(golden, 1)
    assert b * b == b + 1
    assert FieldElement.beta_power(golden, -1) == b - 1


def test_reduce_uses_rational_division(worked):
    # 3 b^2 = -2 b - 3
    assert field_reduce(IntPoly([0, 0, 3]), worked) == FieldElement(worked, [-3, -2])
    assert field_reduce(IntPoly([0, 0, 1]), worked) == FieldElement(worked, [-1, Fraction(-2, 3)])


def test_inverse_of_zero_raises(golden):
    with pytest.raises(ZeroInversion):
        field_inv(FieldElement(golden, [0]))


def test_reducible_input_is_reported():
    base = check_base([-1, 0, 1], tolerance=1e-9)  # x^2 - 1, not irreducible
    with pytest.raises(NonInvertible):
        field_inv(FieldElement(base, [-1, 1]))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["golden", "plastic", "salem_like", "quad"]), st.lists(fractions, min_size=1, max_size=3))
def test_inverse_roundtrip(bases, name, coeffs):
    base = bases[name]
    x = FieldElement(base, coeffs[: base.degree])
    if not x:
        return
    assert x * field_inv(x) == FieldElement.from_rational(base, 1)
    assert (x / x) ** 3 == FieldElement.from_rational(base, 1)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["golden", "plastic", "quad"]), st.integers(0, 30), st.integers(0, 30))
def test_power_law(bases, name, a, b):
    base = bases[name]
    beta = FieldElement.beta_power(base, 1)
    assert beta ** a * beta ** b == FieldElement.beta_power(base, a + b)
    assert beta ** -a * beta ** a == FieldElement.from_rational(base, 1)


def test_power_vanishing_poly_example():
    assert power_vanishing_poly(IntPoly([3, 2, 3]), 2) == IntPoly([9, 14, 9])
    assert power_vanishing_poly(IntPoly([-1, -1, 1]), 2) == IntPoly([1, -3, 1])


def test_classification():
    assert check_base([-1, -1, 1]).eligibility == "FULL"
    assert check_base([3, 2, 3]).eligibility == "UNIT-FRACTIONS-ONLY"
    assert check_base([1, -2]).eligibility == "INVALID"  # beta = 1/2
    assert check_base([1, 1, 0, 0, -1, 0, 0, 1, 1]).eligibility in {"UNIT-FRACTIONS-ONLY", "UNCERTAIN"}


def test_lead_normalised_and_degenerate_rejected():
    assert check_base([1, 1, -1]).minpoly == IntPoly([-1, -1, 1])
    with pytest.raises(DegenerateInput):
        check_base([5])
    with pytest.raises(DegenerateInput):
        check_base([2, 4])


def test_designated_root_defaults_to_largest(golden):
    assert abs(golden.beta.real - (1 + 5 ** 0.5) / 2) < 1e-12
    other = check_base([-1, -1, 1], designated_root_index=1 - golden.designated_root_index)
    assert other.beta.real < 0
