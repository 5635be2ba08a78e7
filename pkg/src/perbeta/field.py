"""The base: minimal polynomial diagnostics and exact arithmetic in Q(beta) = Q[x]/(m)."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable, Literal, Sequence

import numpy as np

from .errors import DegenerateInput, NonInvertible, ZeroInversion
from .poly import IntPoly

Tristate = Literal["yes", "no", "uncertain"]

DEFAULT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class BaseSpec:
    minpoly: IntPoly
    root_moduli: tuple[float, ...]
    designated_root_index: int
    has_unit_circle_conjugate: Tristate
    dominant_modulus: bool
    tolerance: float = DEFAULT_TOLERANCE
    roots: tuple[complex, ...] = field(default=(), compare=False, repr=False)

    @property
    def degree(self) -> int:
        return self.minpoly.degree

    @property
    def beta(self) -> complex:
        """Numeric value of the designated root (diagnostics only)."""
        return self.roots[self.designated_root_index]

    @property
    def eligibility(self) -> str:
        """FULL, UNIT-FRACTIONS-ONLY, UNCERTAIN or INVALID."""
        if max(self.root_moduli) < 1 - self.tolerance:
            return "INVALID"
        if self.has_unit_circle_conjugate == "yes":
            return "UNIT-FRACTIONS-ONLY"
        if self.has_unit_circle_conjugate == "uncertain":
            return "UNCERTAIN"
        return "FULL" if self.dominant_modulus else "INVALID"

    @property
    def height(self) -> int:
        """max |a_i|."""
        return self.minpoly.max_abs()


def _is_self_reciprocal(m: IntPoly) -> bool:
    rev = m.reverse()
    return rev == m or rev == -m


def check_base(
    minpoly: IntPoly | Sequence[int],
    tolerance: float = DEFAULT_TOLERANCE,
    designated_root_index: int | None = None,
) -> BaseSpec:
    """Locate the roots numerically and classify the base.

    The polynomial is normalised to a positive leading coefficient. Root moduli come
    from the eigenvalues of the companion matrix of m(x)/a_d. A conjugate is reported
    on the unit circle when its modulus is within ``tolerance`` of 1. When no modulus is
    that close, the answer is "no" outright if m is not self-reciprocal (an irreducible
    polynomial with a root on the circle must be), and otherwise only if every modulus
    is at least sqrt(tolerance) away from 1; the remaining band reports "uncertain".
    """
    m = minpoly if isinstance(minpoly, IntPoly) else IntPoly(minpoly)
    if m.degree < 1:
        raise DegenerateInput("minimal polynomial must have degree >= 1")
    if m.content() != 1:
        raise DegenerateInput(f"minimal polynomial must have content 1, got {m.content()}")
    if m.lead < 0:
        m = -m
    monic = np.array([float(Fraction(c, m.lead)) for c in reversed(m.coeffs)])
    roots = tuple(complex(r) for r in np.roots(monic))
    moduli = tuple(float(abs(r)) for r in roots)
    gap = min(abs(r - 1.0) for r in moduli)
    if gap <= tolerance:
        unit: Tristate = "yes"
    elif not _is_self_reciprocal(m) or gap > tolerance ** 0.5:
        unit = "no"
    else:
        unit = "uncertain"
    if designated_root_index is None:
        designated_root_index = int(np.argmax(moduli))
    elif not 0 <= designated_root_index < len(roots):
        raise DegenerateInput(f"root index {designated_root_index} out of range")
    return BaseSpec(
        minpoly=m,
        root_moduli=moduli,
        designated_root_index=designated_root_index,
        has_unit_circle_conjugate=unit,
        dominant_modulus=max(moduli) > 1 + tolerance,
        tolerance=tolerance,
        roots=roots,
    )


# --- rational polynomial helpers (lists of Fraction, ascending) -------------

def _rtrim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _rmul(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _rsub(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for k, c in enumerate(a):
        out[k] += c
    for k, c in enumerate(b):
        out[k] -= c
    return _rtrim(out)


def _rdivmod(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    rem = list(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return [], _rtrim(rem)
    quot = [Fraction(0)] * (len(rem) - db)
    lead = b[-1]
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if not c:
            continue
        q = c / lead
        quot[k - db] = q
        for t, bt in enumerate(b):
            if bt:
                rem[k - db + t] -= q * bt
    return _rtrim(quot), _rtrim(rem[:db])


def reduce_rational(coeffs: Sequence[Fraction], m: IntPoly) -> list[Fraction]:
    """Remainder of a rational polynomial modulo m, padded to length deg m."""
    d = m.degree
    _, rem = _rdivmod([Fraction(c) for c in coeffs], [Fraction(c) for c in m.coeffs])
    return rem + [Fraction(0)] * (d - len(rem))


def reduce_integer(p: IntPoly, m: IntPoly) -> list[Fraction]:
    """Remainder of an integer polynomial modulo m, via Horner with a shared a_d^e denominator.

    Linear in deg p (times deg m), with no gcd work until the end; this is what keeps
    evaluating long periodic digit strings cheap.
    """
    d = m.degree
    a = m.coeffs
    lead = a[-1]
    num = [0] * d
    scale = 1
    for c in reversed(p.coeffs):
        top = num[-1]
        shifted = [0] + num[:-1]
        num = [lead * s - top * a[i] for i, s in enumerate(shifted)]
        scale *= lead
        num[0] += c * scale
    return [Fraction(v, scale) for v in num]


# --- field elements ----------------------------------------------------------

def _normalise_coeffs(coeffs: Iterable, d: int) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    if len(out) > d:
        raise ValueError(f"expected at most {d} coefficients, got {len(out)}")
    return tuple(out + [Fraction(0)] * (d - len(out)))


@dataclass(frozen=True)
class FieldElement:
    """sum coeffs[i] * beta^i for 0 <= i < d, with exact rational coefficients."""

    base: BaseSpec
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _normalise_coeffs(self.coeffs, self.base.degree))

    @classmethod
    def from_rational(cls, base: BaseSpec, q) -> FieldElement:
        return cls(base, (Fraction(q),))

    @classmethod
    def beta_power(cls, base: BaseSpec, k: int) -> FieldElement:
        if k >= 0:
            return field_reduce(IntPoly.monomial(k), base)
        return field_inv(cls(base, (0, 1))) ** (-k)

    def _check(self, other) -> FieldElement:
        if isinstance(other, (int, Fraction)):
            return FieldElement.from_rational(self.base, other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.base.minpoly != self.base.minpoly:
            raise ValueError("field elements over different bases")
        return other

    def __add__(self, other) -> FieldElement:
        other = self._check(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.base, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> FieldElement:
        return FieldElement(self.base, (-a for a in self.coeffs))

    def __sub__(self, other) -> FieldElement:
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> FieldElement:
        return (-self) + other

    def __mul__(self, other) -> FieldElement:
        other = self._check(other)
        if other is NotImplemented:
            return other
        prod = _rmul(self.coeffs, other.coeffs)
        return FieldElement(self.base, reduce_rational(prod, self.base.minpoly))

    __rmul__ = __mul__

    def __truediv__(self, other) -> FieldElement:
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self * field_inv(other)

    def __rtruediv__(self, other) -> FieldElement:
        return self._check(other) * field_inv(self)

    def __pow__(self, k: int) -> FieldElement:
        if k < 0:
            return field_inv(self) ** (-k)
        result = FieldElement.from_rational(self.base, 1)
        acc = self
        while k:
            if k & 1:
                result = result * acc
            k >>= 1
            if k:
                acc = acc * acc
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = FieldElement.from_rational(self.base, other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.base.minpoly == other.base.minpoly and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.base.minpoly, self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def denominator(self) -> int:
        return lcm(*(c.denominator for c in self.coeffs))

    def numerators(self, scale: int | None = None) -> IntPoly:
        """Integer polynomial scale * self (scale defaults to the common denominator)."""
        scale = self.denominator() if scale is None else scale
        return IntPoly(int(c * scale) for c in self.coeffs)

    def __str__(self) -> str:
        return format_element(self.coeffs)

    def __repr__(self) -> str:
        return f"FieldElement({[str(c) for c in self.coeffs]})"


def format_element(coeffs: Sequence[Fraction], var: str = "b") -> str:
    terms = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if mono:
            body = mono if abs(c) == 1 else f"({abs(c)})*{mono}"
        else:
            body = str(abs(c))
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def field_reduce(p, base: BaseSpec) -> FieldElement:
    """The element p(beta) for an integer or rational polynomial p."""
    if isinstance(p, IntPoly):
        return FieldElement(base, reduce_integer(p, base.minpoly))
    return FieldElement(base, reduce_rational(p, base.minpoly))


def field_inv(x: FieldElement) -> FieldElement:
    """Inverse via the extended Euclidean algorithm against the minimal polynomial."""
    if not x:
        raise ZeroInversion("cannot invert zero")
    m = [Fraction(c) for c in x.base.minpoly.coeffs]
    # invariant: r_k = s_k * x  (mod m)
    r0, s0 = m, []
    r1, s1 = _rtrim(list(x.coeffs)), [Fraction(1)]
    while len(r1) > 1:
        q, r = _rdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _rsub(s0, _rmul(q, s1))
        if not r1:
            raise NonInvertible(
                f"element shares a factor of degree {len(r0) - 1} with the minimal polynomial"
            )
    inv = [c / r1[0] for c in s1]
    return FieldElement(x.base, reduce_rational(inv, x.base.minpoly))


# --- minimal polynomials of powers -------------------------------------------

def _solve_rational(columns: list[list[Fraction]], target: list[Fraction]) -> list[Fraction] | None:
    """Solve sum c_s columns[s] = target exactly; None if inconsistent."""
    rows = len(target)
    ncols = len(columns)
    aug = [[columns[s][r] for s in range(ncols)] + [target[r]] for r in range(rows)]
    pivots = []
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, rows) if aug[r][col] != 0), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = 1 / aug[row][col]
        aug[row] = [v * inv for v in aug[row]]
        for r in range(rows):
            if r != row and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
    if any(aug[r][ncols] != 0 for r in range(row, rows)):
        return None
    sol = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        sol[col] = aug[r][ncols]
    return sol


def power_vanishing_poly(f: IntPoly, k: int) -> IntPoly:
    """Primitive polynomial g of least degree with g(x^k) = 0 in Q[x]/(f).

    For irreducible f this is the minimal polynomial of gamma^k for any root gamma.
    Found by the first linear dependence among 1, x^k, x^(2k), ... modulo f.
    """
    if k < 1:
        raise ValueError("k must be positive")
    D = f.degree
    step = reduce_integer(IntPoly.monomial(k), f)
    powers = [[Fraction(1)] + [Fraction(0)] * (D - 1)]
    for t in range(1, D + 1):
        nxt = reduce_rational(_rmul(powers[-1], step), f)
        sol = _solve_rational(powers, nxt)
        if sol is not None:
            coeffs = [-c for c in sol] + [Fraction(1)]
            den = lcm(*(c.denominator for c in coeffs))
            return IntPoly(int(c * den) for c in coeffs).primitive_part()
        powers.append(nxt)
    raise AssertionError("no linear dependence found within degree bound")
