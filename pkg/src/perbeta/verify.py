"""Exact values of periodic representations, and witnesses recovered from them."""

from __future__ import annotations

from fractions import Fraction

from .errors import CertificateError, NonInvertible, PreconditionViolated, ValidationFailed
from .field import FieldElement, field_inv, field_reduce
from .membership import member_nZbeta, witness_budget
from .poly import IntPoly
from .representation import PeriodicRep
from .witness import FermatWitness, certify, check_modulus


def _numerator(rep: PeriodicRep) -> tuple[IntPoly, int, int]:
    """(Z, E, p) with value(rep) = Z(beta) / (beta^E (beta^p - 1)).

    The preperiod contributes A(x) (x^p - 1) with A(x) = sum a_t x^(E - t), and the
    period contributes C(x) x^(E - N0 + 1) with C(x) = sum c_t x^(p - 1 - t).
    """
    n0 = rep.period_start
    p = len(rep.period)
    E = max(n0 - 1, 0)
    A = IntPoly.monomial(0, 0)
    if rep.preperiod:
        coeffs = [0] * (E - rep.start + 1)
        for k, a in enumerate(rep.preperiod):
            coeffs[E - (rep.start + k)] = a
        A = IntPoly(coeffs)
    C = IntPoly(reversed(rep.period))
    Z = A * IntPoly.binomial(p, 0) + C.shift(E - n0 + 1)
    return Z, E, p


def eval_rep(rep: PeriodicRep) -> FieldElement:
    """Exact value in Q(beta), summing the period as a geometric series.

    The identity is algebraic, so it is also computed for bases with |beta| <= 1
    (where the series is only formal).
    """
    base = rep.base
    if rep.is_zero():
        return FieldElement.from_rational(base, 0)
    Z, E, p = _numerator(rep)
    den = field_reduce(IntPoly.binomial(E + p, E), base)
    try:
        return field_reduce(Z, base) * field_inv(den)
    except NonInvertible as exc:
        raise NonInvertible(f"beta^{p} - 1 is not invertible: degenerate base ({exc})") from exc


def values_equal(rep: PeriodicRep, expected) -> bool:
    if not isinstance(expected, FieldElement):
        expected = FieldElement.from_rational(rep.base, Fraction(expected))
    return eval_rep(rep) == expected


def witness_from_rep(rep: PeriodicRep, n: int) -> FermatWitness:
    """From 1/n = Z(beta) / (beta^E (beta^p - 1)) read off beta^(E+p) - beta^E = n Z(beta)."""
    check_modulus(n)
    base = rep.base
    if eval_rep(rep) != FieldElement.from_rational(base, Fraction(1, n)):
        raise PreconditionViolated(f"representation does not evaluate to 1/{n}")
    Z, E, p = _numerator(rep)
    lhs = IntPoly.binomial(E + p, E) - Z * n
    try:
        r = lhs.divmod_exact(base.minpoly)
        w = FermatWitness(base, n, E + p, E, Z, r)
    except (ArithmeticError, CertificateError) as exc:
        raise ValidationFailed(f"assembled certificate is inexact: {exc}") from exc
    res = member_nZbeta(IntPoly.binomial(w.i, w.j), base, n, witness_budget(w))
    if not res.member:
        raise ValidationFailed("membership oracle rejects the recovered exponents")
    canon = w.canonical()
    reduced = certify(base, n, canon.i, canon.j, canon.r)
    return reduced.canonical()
