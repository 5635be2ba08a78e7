"""Eventually periodic digit strings sum_{k >= -L} a_k beta^(-k) with integer digits."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .errors import DensityViolated, PreconditionViolated
from .field import BaseSpec, FieldElement
from .poly import LaurentIntPoly
from .witness import FermatWitness


@dataclass(frozen=True)
class PeriodicRep:
    """Digit a_k multiplies beta^(-k); the string starts at position -L.

    The preperiod occupies positions -L .. -L + len(preperiod) - 1 and the period
    repeats forever after that.
    """

    base: BaseSpec
    L: int
    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "preperiod", tuple(int(a) for a in self.preperiod))
        object.__setattr__(self, "period", tuple(int(a) for a in self.period))
        if not self.period:
            raise ValueError("period must be nonempty")

    @property
    def start(self) -> int:
        return -self.L

    @property
    def period_start(self) -> int:
        return -self.L + len(self.preperiod)

    @classmethod
    def zero(cls, base: BaseSpec) -> PeriodicRep:
        return cls(base, 0, (), (0,))

    def digit(self, k: int) -> int:
        if k < self.start:
            return 0
        if k < self.period_start:
            return self.preperiod[k - self.start]
        return self.period[(k - self.period_start) % len(self.period)]

    def max_digit(self) -> int:
        return max(abs(a) for a in self.preperiod + self.period)

    def is_zero(self) -> bool:
        return not any(self.preperiod) and not any(self.period)

    def to_dict(self) -> dict:
        return {"L": self.L, "preperiod": list(self.preperiod), "period": list(self.period)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, base: BaseSpec, data: dict) -> PeriodicRep:
        try:
            L = int(data["L"])
            pre = [int(a) for a in data["preperiod"]]
            per = [int(a) for a in data["period"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed representation: {exc}") from exc
        return cls(base, L, pre, per)

    def human(self) -> str:
        """Digits at positions <= 0, a point, the fractional preperiod, then (period).

        If the period begins at or before position 0 it is unrolled past the point.
        """
        digits = list(self.preperiod)
        period = list(self.period)
        n0 = self.period_start
        while n0 <= 0:
            digits += period
            n0 += len(period)
        start = self.start
        whole = [digits[k - start] for k in range(start, min(1, start + len(digits)))]
        frac = [digits[k - start] for k in range(max(1, start), start + len(digits))]
        if start > 1:
            frac = [0] * (start - 1) + frac
        int_part = ",".join(map(str, whole)) or "0"
        return f"{int_part} . {','.join(map(str, frac))} ({','.join(map(str, period))})"

    def __str__(self) -> str:
        return self.human()


def _minimal_period(period: Sequence[int]) -> list[int]:
    size = len(period)
    for q in range(1, size + 1):
        if size % q == 0 and all(period[t] == period[t % q] for t in range(size)):
            return list(period[:q])
    return list(period)


def canonicalize(rep: PeriodicRep) -> PeriodicRep:
    """Minimal period, minimal preperiod, and a string starting at min(0, first nonzero)."""
    pre = list(rep.preperiod)
    per = _minimal_period(rep.period)
    start = rep.start
    if start > 0:
        pre = [0] * start + pre
        start = 0
    while pre and pre[-1] == per[-1]:
        pre.pop()
        per = [per[-1]] + per[:-1]
    while start < 0 and pre and pre[0] == 0:
        pre.pop(0)
        start += 1
    while start < 0 and not pre and per[0] == 0:
        per = per[1:] + per[:1]
        start += 1
    return PeriodicRep(rep.base, -start, tuple(pre), tuple(per))


def _from_digit_function(base: BaseSpec, first: int, periodic_from: int, period_len: int, digit) -> PeriodicRep:
    pre = [digit(t) for t in range(first, periodic_from)]
    per = [digit(t) for t in range(periodic_from, periodic_from + period_len)]
    return canonicalize(PeriodicRep(base, -first, pre, per))


def rep_of_unit_fraction(base: BaseSpec, n: int, w: FermatWitness) -> PeriodicRep:
    """1/n = beta^(-i) p(beta) (1 + beta^(-e) + beta^(-2e) + ...), with e = i - j.

    Copies of p's coefficient vector are laid down every e positions; when
    deg p < 2e at most two copies overlap, so digits are bounded by 2 max|p|.
    """
    if w.n != n:
        raise PreconditionViolated(f"witness is for n={w.n}, not {n}")
    if w.base.minpoly != base.minpoly:
        raise PreconditionViolated("witness is for a different base")
    e = w.period
    p = w.p.coeffs
    if len(p) - 1 >= 2 * e:
        raise DensityViolated(f"deg p = {len(p) - 1} >= 2(i - j) = {2 * e}; call densify first")
    i = w.i

    def digit(t: int) -> int:
        # coefficient index l = i + k e - t for k >= 0
        total = 0
        k = max(0, -((i - t) // e)) if t > i else 0
        while True:
            idx = i + k * e - t
            if idx >= len(p):
                break
            if idx >= 0:
                total += p[idx]
            k += 1
        return total

    return _from_digit_function(base, min(0, i - (len(p) - 1)), i, e, digit)


def multiply_finite(rep: PeriodicRep, z: LaurentIntPoly) -> PeriodicRep:
    """Digits of z(beta) * value(rep): a finite sum of shifted, scaled copies of rep."""
    if not z or rep.is_zero():
        return PeriodicRep.zero(rep.base)
    terms = z.terms()
    exps = [e for e, _ in terms]

    def digit(t: int) -> int:
        # beta^e * a_k beta^(-k) sits at position k - e
        return sum(c * rep.digit(t + e) for e, c in terms)

    first = min(rep.start - max(exps), 0)
    periodic_from = max(rep.period_start - min(exps), first)
    return _from_digit_function(rep.base, first, periodic_from, len(rep.period), digit)


def field_element_to_laurent(z: FieldElement) -> LaurentIntPoly:
    coeffs = []
    for c in z.coeffs:
        if c.denominator != 1:
            raise ValueError("element does not have integer coordinates")
        coeffs.append(int(c))
    return LaurentIntPoly(0, coeffs)


def rep_of_field_element(x: FieldElement, factor: float = 2, method: str = "auto") -> PeriodicRep:
    """x = z / n with z in Z[beta]; represent 1/n, then multiply by z."""
    from .fermat import densify, find_witness

    base = x.base
    if not x:
        return PeriodicRep.zero(base)
    n = x.denominator()
    z = field_element_to_laurent(x * n)
    if n == 1:
        unit = PeriodicRep(base, 0, (1,), (0,))
        return multiply_finite(unit, z)
    w = densify(find_witness(base, n, method), factor)
    return multiply_finite(rep_of_unit_fraction(base, n, w), z)


# --- best-effort digit reduction --------------------------------------------

class _Workspace:
    """Mutable digits: explicit preperiod positions plus one (unrolled) period block."""

    def __init__(self, rep: PeriodicRep, copies: int):
        self.base = rep.base
        self.start = rep.start
        self.pre = list(rep.preperiod)
        self.per = list(rep.period) * copies
        self.n0 = rep.period_start

    def snapshot(self):
        return self.start, list(self.pre), list(self.per)

    def restore(self, snap):
        self.start, pre, per = snap
        self.pre, self.per = list(pre), list(per)

    def _add_pre(self, pos: int, v: int):
        if pos < self.start:
            self.pre = [0] * (self.start - pos) + self.pre
            self.start = pos
        self.pre[pos - self.start] += v

    def apply(self, q: int, c: int):
        """Add c * beta^(-q) m(beta) = 0, repeated every period when q is periodic."""
        a = self.base.minpoly.coeffs
        P = len(self.per)
        for i, ai in enumerate(a):
            if not ai:
                continue
            pos = q - i
            if q < self.n0:
                self._add_pre(pos, c * ai)
                continue
            self.per[(pos - self.n0) % P] += c * ai
            if pos < self.n0:
                self._add_pre(pos, c * ai)

    def key(self):
        digits = self.pre + self.per
        top = max(abs(v) for v in digits)
        return top, sum(1 for v in digits if abs(v) == top), sum(abs(v) for v in digits)

    def positions(self):
        for k, v in enumerate(self.pre):
            yield self.start + k, v
        for k, v in enumerate(self.per):
            yield self.n0 + k, v

    def to_rep(self) -> PeriodicRep:
        return canonicalize(PeriodicRep(self.base, -self.start, self.pre, self.per))


def normalize_digits(rep: PeriodicRep, target_bound: int, max_passes: int = 32, max_copies: int = 4) -> PeriodicRep:
    """Greedily shrink the largest digits by adding shifted multiples of m(x).

    This is a local heuristic, not a parallel addition algorithm: it makes no promise
    of reaching ``target_bound``; check ``max_digit()`` of the result. The value is
    re-verified exactly and the input is returned unchanged if nothing improved.
    """
    from .verify import eval_rep

    if rep.is_zero() or rep.max_digit() <= target_bound:
        return rep
    d = rep.base.degree
    a = rep.base.minpoly.coeffs
    copies = 1
    while len(rep.period) * copies < d + 1:
        copies += 1
    best = None
    for extra in range(max_copies):
        ws = _Workspace(rep, copies + extra)
        for _ in range(max_passes):
            cur = ws.key()
            if cur[0] <= target_bound:
                break
            pos, val = next((t, v) for t, v in ws.positions() if abs(v) == cur[0])
            choice = None
            for i in range(d + 1):
                if not a[i]:
                    continue
                q = pos + i
                mags = {1, abs(val) // abs(a[i]), -(-abs(val) // abs(a[i]))}
                for mag in mags:
                    if mag == 0:
                        continue
                    c = -mag if (val > 0) == (a[i] > 0) else mag
                    snap = ws.snapshot()
                    ws.apply(q, c)
                    k = ws.key()
                    if k < cur and (choice is None or k < choice[0]):
                        choice = (k, q, c)
                    ws.restore(snap)
            if choice is None:
                break
            ws.apply(choice[1], choice[2])
        cand = ws.to_rep()
        if best is None or cand.max_digit() < best.max_digit():
            best = cand
        if best.max_digit() <= target_bound:
            break
    if best is None or best.max_digit() >= rep.max_digit():
        return rep
    if eval_rep(best) != eval_rep(rep):
        return rep
    return best
