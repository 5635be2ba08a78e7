"""Certified generalized-Fermat witnesses: x^i - x^j - n p(x) = r(x) m(x) in Z[x]."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import CertificateError, InexactDivision, PreconditionViolated
from .field import BaseSpec, check_base
from .poly import IntPoly, format_poly


def check_modulus(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise PreconditionViolated(f"modulus must be an integer >= 2, got {n!r}")


@dataclass(frozen=True)
class FermatWitness:
    base: BaseSpec
    n: int
    i: int
    j: int
    p: IntPoly
    r: IntPoly

    def __post_init__(self):
        check_modulus(self.n)
        if not (self.i > self.j >= 0):
            raise CertificateError(f"need i > j >= 0, got i={self.i}, j={self.j}")
        lhs = IntPoly.binomial(self.i, self.j) - self.p * self.n
        if lhs != self.r * self.base.minpoly:
            raise CertificateError(
                f"x^{self.i} - x^{self.j} - {self.n}*p(x) != r(x)*m(x) for n={self.n}"
            )

    @property
    def minpoly(self) -> IntPoly:
        return self.base.minpoly

    @property
    def period(self) -> int:
        return self.i - self.j

    def canonical(self) -> FermatWitness:
        """Divide out common powers of x so that j is as small as the certificate allows."""
        s = min(self.j, self.p.valuation() if self.p else self.j,
                self.r.valuation() if self.r else self.j)
        if s == 0:
            return self
        drop = lambda q: IntPoly(q.coeffs[s:])  # noqa: E731
        return FermatWitness(self.base, self.n, self.i - s, self.j - s, drop(self.p), drop(self.r))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "i": self.i,
            "j": self.j,
            "p": list(self.p.coeffs),
            "r": list(self.r.coeffs),
            "minpoly": list(self.minpoly.coeffs),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict, base: BaseSpec | None = None) -> FermatWitness:
        m = IntPoly(data["minpoly"])
        if base is None:
            base = check_base(m)
        elif base.minpoly != m and base.minpoly != -m:
            raise PreconditionViolated("witness minpoly does not match base")
        r = IntPoly(data["r"])
        if base.minpoly != m:
            r = -r
        return cls(base, int(data["n"]), int(data["i"]), int(data["j"]), IntPoly(data["p"]), r)

    @classmethod
    def from_json(cls, text: str, base: BaseSpec | None = None) -> FermatWitness:
        return cls.from_dict(json.loads(text), base)

    def identity(self, var: str = "b") -> str:
        """Human-readable form b^i - b^j = n*(p(b))."""
        return f"{var}^{self.i} - {var}^{self.j} = {self.n}*({format_poly(self.p.coeffs, var)})"


def certify(base: BaseSpec, n: int, i: int, j: int, r: IntPoly) -> FermatWitness:
    """Build the witness for x^i - x^j = r m (mod n), recovering p by exact division.

    ``r`` is first reduced into [0, n) coefficientwise; i < j is handled by swapping.
    """
    check_modulus(n)
    if i < j:
        i, j, r = j, i, -r
    if i == j:
        raise CertificateError("degenerate exponents i == j")
    r = r.mod(n)
    diff = IntPoly.binomial(i, j) - r * base.minpoly
    try:
        p = diff.exact_div_int(n)
    except InexactDivision as exc:
        raise CertificateError(f"x^{i} - x^{j} is not congruent to r*m mod {n}") from exc
    return FermatWitness(base, n, i, j, p, r)
