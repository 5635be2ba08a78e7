"""Dense integer polynomials over Z[x], Laurent polynomials, and reduction mod n.

Coefficients are stored in ascending order of exponent, so ``IntPoly((3, 2, 3))``
is ``3 + 2x + 3x^2``.
"""

from __future__ import annotations

from functools import reduce
from math import gcd
from typing import Iterable, Sequence

from .errors import InexactDivision


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class IntPoly:
    """Immutable polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    @classmethod
    def binomial(cls, i: int, j: int) -> IntPoly:
        """x^i - x^j."""
        out = [0] * (max(i, j) + 1)
        out[i] += 1
        out[j] -= 1
        return cls(out)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        return format_poly(self.coeffs)

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other) -> IntPoly:
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return IntPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> IntPoly:
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> IntPoly:
        return _as_poly(other) - self

    def __mul__(self, other) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        other = _as_poly(other)
        return IntPoly(poly_mul_coeffs(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, k: int) -> IntPoly:
        """Multiply by x^k (k >= 0)."""
        if not self.coeffs:
            return self
        return IntPoly([0] * k + list(self.coeffs))

    def compose_power(self, k: int) -> IntPoly:
        """Return self(x^k)."""
        if k == 1 or not self.coeffs:
            return self
        out = [0] * (k * self.degree + 1)
        for e, c in enumerate(self.coeffs):
            out[k * e] = c
        return IntPoly(out)

    def reverse(self, length: int | None = None) -> IntPoly:
        """x^(length-1) * self(1/x); ``length`` defaults to len(coeffs)."""
        length = len(self.coeffs) if length is None else length
        if length < len(self.coeffs):
            raise ValueError("reverse length smaller than polynomial")
        padded = list(self.coeffs) + [0] * (length - len(self.coeffs))
        return IntPoly(reversed(padded))

    def valuation(self) -> int:
        """Largest s with x^s dividing self (0 for the zero polynomial)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return 0

    def content(self) -> int:
        return reduce(gcd, self.coeffs, 0)

    def primitive_part(self) -> IntPoly:
        """Divide by the content and make the leading coefficient positive."""
        g = self.content()
        if g == 0:
            return self
        if self.lead < 0:
            g = -g
        return IntPoly(c // g for c in self.coeffs)

    def mod(self, n: int) -> IntPoly:
        return IntPoly(c % n for c in self.coeffs)

    def divmod_exact(self, divisor: IntPoly) -> IntPoly:
        """Quotient of an exact division in Z[x]; raises InexactDivision otherwise."""
        if not divisor:
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        d = divisor.degree
        lead = divisor.lead
        dc = divisor.coeffs
        if len(rem) - 1 < d:
            if rem:
                raise InexactDivision("remainder is nonzero")
            return IntPoly()
        quot = [0] * (len(rem) - d)
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q, r = divmod(c, lead)
            if r:
                raise InexactDivision(f"leading coefficient {lead} does not divide {c}")
            quot[k - d] = q
            base = k - d
            for t, a in enumerate(dc):
                if a:
                    rem[base + t] -= q * a
        if any(rem[:d]):
            raise InexactDivision("remainder is nonzero")
        return IntPoly(quot)

    def exact_div_int(self, n: int) -> IntPoly:
        out = []
        for c in self.coeffs:
            q, r = divmod(c, n)
            if r:
                raise InexactDivision(f"{n} does not divide coefficient {c}")
            out.append(q)
        return IntPoly(out)

    def max_abs(self) -> int:
        return max((abs(c) for c in self.coeffs), default=0)


X = IntPoly((0, 1))


def _as_poly(p) -> IntPoly:
    if isinstance(p, IntPoly):
        return p
    if isinstance(p, int):
        return IntPoly([p])
    raise TypeError(f"cannot interpret {p!r} as IntPoly")


def poly_mul_coeffs(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Schoolbook product that skips zero coefficients of the sparser factor."""
    if not a or not b:
        return []
    nz_a = sum(1 for c in a if c)
    nz_b = sum(1 for c in b if c)
    if nz_a > nz_b:
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            if cb:
                out[i + j] += ca * cb
    return out


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    return a * b


def mod_project(p: IntPoly, n: int) -> tuple[int, ...]:
    """Coefficient vector of ``p`` reduced into [0, n), ascending, trailing zeros dropped."""
    if n < 2:
        raise ValueError("modulus must be at least 2")
    return p.mod(n).coeffs


def geometric(step: int, count: int) -> IntPoly:
    """1 + x^step + x^(2 step) + ... with ``count`` terms."""
    out = [0] * (step * (count - 1) + 1)
    for u in range(count):
        out[u * step] = 1
    return IntPoly(out)


def format_poly(coeffs: Sequence[int], var: str = "x") -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{a}*{mono}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def parse_coeffs(text: str, descending: bool = False) -> IntPoly:
    """Parse comma-separated integers, ascending exponents unless ``descending``."""
    parts = [s.strip() for s in text.split(",")]
    if not parts or any(not s for s in parts):
        raise ValueError(f"malformed coefficient list: {text!r}")
    values = [int(s) for s in parts]
    if descending:
        values.reverse()
    return IntPoly(values)


class LaurentIntPoly:
    """Finite sum of c_k x^k with k possibly negative; an element of Z[x, 1/x]."""

    __slots__ = ("low_exponent", "coeffs")

    def __init__(self, low_exponent: int, coeffs: Iterable[int]):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        start = 0
        while start < len(coeffs) and coeffs[start] == 0:
            start += 1
        if start == len(coeffs):
            low_exponent, coeffs = 0, []
        else:
            low_exponent += start
            coeffs = coeffs[start:]
        object.__setattr__(self, "low_exponent", low_exponent)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentIntPoly is immutable")

    @classmethod
    def from_poly(cls, p: IntPoly, shift: int = 0) -> LaurentIntPoly:
        return cls(shift, p.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentIntPoly):
            return NotImplemented
        return (self.low_exponent, self.coeffs) == (other.low_exponent, other.coeffs)

    def __hash__(self) -> int:
        return hash((self.low_exponent, self.coeffs))

    def __repr__(self) -> str:
        return f"LaurentIntPoly({self.low_exponent}, {list(self.coeffs)})"

    def __add__(self, other: LaurentIntPoly) -> LaurentIntPoly:
        if not self:
            return other
        if not other:
            return self
        lo = min(self.low_exponent, other.low_exponent)
        hi = max(self.low_exponent + len(self.coeffs), other.low_exponent + len(other.coeffs))
        out = [0] * (hi - lo)
        for src in (self, other):
            for k, c in enumerate(src.coeffs):
                out[src.low_exponent - lo + k] += c
        return LaurentIntPoly(lo, out)

    def terms(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs with nonzero coefficient."""
        return [(self.low_exponent + k, c) for k, c in enumerate(self.coeffs) if c]

    def l1_norm(self) -> int:
        return sum(abs(c) for c in self.coeffs)
