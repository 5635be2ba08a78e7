"""Independent decision procedure for q(beta) in n Z[beta].

q is in the ideal (m, n) of Z[x] with a degree-bounded multiplier r exactly when the
coefficient vector of q lies in the Z_n-span of the shifted coefficient vectors of m.
The span is put into Howell form (an echelon form over Z_n in which every vector of
the span with leading zeros is generated by the lower pivot rows), after which
membership is decided by greedy reduction. Rows of the shift matrix are banded, so
rows are kept sparse and the elimination is linear in the budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import BudgetTooSmall
from .field import BaseSpec
from .poly import IntPoly
from .witness import check_modulus


@dataclass(frozen=True)
class MembershipResult:
    member: bool
    definitive: bool
    budget: int
    p: IntPoly | None = None
    r: IntPoly | None = None

    def __bool__(self) -> bool:
        return self.member


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return x0, y0, a


def _combine(u: dict, cu: int, v: dict, cv: int, n: int) -> dict:
    out = {}
    for k, val in u.items():
        out[k] = val * cu
    for k, val in v.items():
        out[k] = out.get(k, 0) + val * cv
    return {k: val % n for k, val in out.items() if val % n}


class ShiftLattice:
    """Howell form of span{x^s m(x) mod n : 0 <= s <= budget - deg m} in Z_n^(budget+1)."""

    def __init__(self, minpoly: IntPoly, n: int, budget: int):
        self.n = n
        self.budget = budget
        self.pivots: dict[int, tuple[dict, dict]] = {}
        mod = [c % n for c in minpoly.coeffs]
        d = minpoly.degree
        buckets: dict[int, list[tuple[dict, dict]]] = {}
        top = max(k for k, c in enumerate(mod) if c)
        for s in range(budget - d + 1):
            vec = {s + k: c for k, c in enumerate(mod) if c}
            buckets.setdefault(s + top, []).append((vec, {s: 1}))
        for c in range(budget, -1, -1):
            rows = buckets.pop(c, None)
            if not rows:
                continue
            pv, pa = rows[0]
            for rv, ra in rows[1:]:
                a, b = pv[c], rv[c]
                x, y, g = _xgcd(a, b)
                new_v, new_a = _combine(pv, x, rv, y, n), _combine(pa, x, ra, y, n)
                rem_v = _combine(pv, b // g, rv, -(a // g), n)
                if rem_v:
                    rem_a = _combine(pa, b // g, ra, -(a // g), n)
                    buckets.setdefault(max(rem_v), []).append((rem_v, rem_a))
                pv, pa = new_v, new_a
            self.pivots[c] = (pv, pa)
            h = n // gcd(pv[c], n)
            if h != n:
                ann_v = {k: val * h % n for k, val in pv.items() if val * h % n}
                if ann_v:
                    ann_a = {k: val * h % n for k, val in pa.items() if val * h % n}
                    buckets.setdefault(max(ann_v), []).append((ann_v, ann_a))

    def reduce(self, q: IntPoly) -> dict | None:
        """Multiplier coefficients {s: r_s} with q = sum r_s x^s m (mod n), or None."""
        n = self.n
        vec = {k: c % n for k, c in enumerate(q.coeffs) if c % n}
        mult: dict = {}
        for c in range(self.budget, -1, -1):
            val = vec.get(c)
            if not val:
                continue
            piv = self.pivots.get(c)
            if piv is None:
                return None
            pv, pa = piv
            a = pv[c]
            g = gcd(a, n)
            if val % g:
                return None
            mod = n // g
            t = (val // g) * pow(a // g, -1, mod) % mod if mod > 1 else 0
            vec = _combine(vec, 1, pv, -t, n)
            mult = _combine(mult, 1, pa, t, n)
        return mult


def default_budget(q: IntPoly, base: BaseSpec, n: int) -> int:
    return max(q.degree, 2 * base.degree * n)


def witness_budget(w) -> int:
    """Smallest budget that admits the witness's own multiplier r."""
    return max(w.i, w.r.degree + w.base.degree)


def member_nZbeta(
    q: IntPoly, base: BaseSpec, n: int, degree_budget: int | None = None
) -> MembershipResult:
    """Decide whether q = n p + r m in Z[x] with deg r <= degree_budget - deg m.

    A negative answer is definitive (independent of the budget) when a_d is a unit
    mod n, since then division by m over Z_n bounds deg r by deg q - deg m.
    """
    check_modulus(n)
    budget = default_budget(q, base, n) if degree_budget is None else degree_budget
    if budget < q.degree:
        raise BudgetTooSmall(f"degree budget {budget} is below deg q = {q.degree}")
    m = base.minpoly
    definitive = gcd(m.lead, n) == 1
    if budget < m.degree:
        hit = q.mod(n) == IntPoly()
        r = IntPoly() if hit else None
        p = q.exact_div_int(n) if hit else None
        return MembershipResult(hit, definitive, budget, p, r)
    mult = ShiftLattice(m, n, budget).reduce(q)
    if mult is None:
        return MembershipResult(False, definitive, budget)
    r = IntPoly([mult.get(s, 0) for s in range(budget - m.degree + 1)])
    p = (q - r * m).exact_div_int(n)
    return MembershipResult(True, True, budget, p, r)
