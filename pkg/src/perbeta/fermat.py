"""Finding exponents i > j with beta^i - beta^j in n Z[beta].

Three constructions, all ending in an exactly certified FermatWitness:

* the modular walk when a_0 and a_d are units mod n (the walk is a permutation of
  Z_n^d, so it returns to its start);
* for n = p^l with p dividing a_d, passage to a power beta^k whose minimal
  polynomial has leading coefficient divisible by p^l, then recursion on the
  lower-degree polynomial left after deleting that leading term;
* CRT assembly of witnesses for coprime moduli.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from math import gcd, lcm
from typing import Iterator, Literal

from .errors import PerBetaError, PreconditionViolated, SearchBudgetExceeded
from .field import BaseSpec, power_vanishing_poly
from .membership import member_nZbeta
from .poly import IntPoly, geometric
from .witness import FermatWitness, certify, check_modulus

log = logging.getLogger(__name__)

Method = Literal["auto", "walk", "graph"]


def env_budget(default: int) -> int:
    """PERBETA_BUDGET overrides search budgets when set."""
    value = os.environ.get("PERBETA_BUDGET")
    return int(value) if value else default


@dataclass(frozen=True)
class WalkState:
    z: tuple[int, ...]
    k: int


def factorize(n: int) -> list[tuple[int, int]]:
    out = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            e = 0
            while n % q == 0:
                n //= q
                e += 1
            out.append((q, e))
        q += 1
    if n > 1:
        out.append((n, 1))
    return out


# --- the modular walk ---------------------------------------------------------

def walk(f: IntPoly, n: int) -> Iterator[tuple[WalkState, int]]:
    """Yield (z^(k), p_k) starting from z^(0) = (1, 0, ..., 0), until z returns to it.

    z^(k) + p_k f = x * z^(k+1) (mod n) with p_k chosen to kill the constant term.
    """
    D = f.degree
    a = [c % n for c in f.coeffs]
    inv0 = pow(a[0], -1, n)
    start = (1,) + (0,) * (D - 1)
    z = start
    k = 0
    while True:
        pk = -z[0] * inv0 % n
        yield WalkState(z, k), pk
        c = [(z[t] + pk * a[t]) % n for t in range(D)] + [pk * a[D] % n]
        z = tuple(c[1:])
        k += 1
        if z == start:
            return


def _walk_relation(f: IntPoly, n: int) -> tuple[int, int, IntPoly]:
    """(i, 0, R) with x^i - 1 = R f (mod n); requires f(0), lead(f) units mod n."""
    if gcd(f[0], n) != 1 or gcd(f.lead, n) != 1:
        raise PreconditionViolated(
            f"walk needs gcd(a_0, n) = gcd(a_d, n) = 1; got a_0={f[0]}, a_d={f.lead}, n={n}"
        )
    ps = [pk for _, pk in walk(f, n)]
    return len(ps), 0, IntPoly(ps)


def coprime_walk(base: BaseSpec, n: int) -> FermatWitness:
    check_modulus(n)
    i, j, r = _walk_relation(base.minpoly, n)
    return certify(base, n, i, j, r)


# --- prime powers --------------------------------------------------------------

def power_min_poly(base: BaseSpec, k: int) -> IntPoly:
    """Primitive minimal polynomial of beta^k (exact linear algebra in Q(beta))."""
    return power_vanishing_poly(base.minpoly, k)


class _RecursionFailed(PerBetaError):
    pass


def _local_relation(f: IntPoly, p: int, ell: int, depth: int, k_budget: int) -> tuple[int, int, IntPoly]:
    """(i, j, R) with x^i - x^j = R f (mod p^ell), for any f with content prime to p."""
    n = p ** ell
    c = f.content()
    if c % p == 0:
        raise _RecursionFailed(f"polynomial {f} vanishes mod {p}")
    if c != 1 or f.lead < 0:
        prim = f.primitive_part()
        unit = f.lead // prim.lead
        i, j, r = _local_relation(prim, p, ell, depth, k_budget)
        return i, j, (r * pow(unit, -1, n)).mod(n)
    s = f.valuation()
    if s:
        i, j, r = _local_relation(IntPoly(f.coeffs[s:]), p, ell, depth, k_budget)
        return i + s, j + s, r
    if f.degree == 0:
        u = pow(f[0], -1, n)
        return 1, 0, (IntPoly([-1, 1]) * u).mod(n)
    if f[0] % p and f.lead % p:
        return _walk_relation(f, n)
    if f.lead % p:
        # p divides f(0) only: work with the reversed polynomial (beta -> 1/beta)
        D = f.degree
        i, j, r = _local_relation(f.reverse(), p, ell, depth, k_budget)
        N = max(i, r.degree + D)
        return N - j, N - i, (-r.reverse(N - D + 1)).mod(n)
    if depth <= 0:
        raise _RecursionFailed("recursion depth budget exhausted")
    for k in range(1, k_budget + 1):
        g = power_vanishing_poly(f, k)
        c = g.lead
        if c % n == 0:
            break
    else:
        raise _RecursionFailed(f"no power k <= {k_budget} with {n} | c(beta^k)")
    h = g - IntPoly.monomial(g.degree, c)
    i, j, r = _local_relation(h, p, ell, depth - 1, k_budget)
    # x^i - x^j = r h (mod n) and h(x^k) = g(x^k) - c x^(k deg g), with n | c, f | g(x^k)
    u = g.compose_power(k).divmod_exact(f)
    return k * i, k * j, (r.compose_power(k) * u).mod(n)


def prime_power_witness(
    base: BaseSpec,
    p: int,
    ell: int,
    depth_budget: int | None = None,
    k_budget: int | None = None,
    fallback: bool = True,
) -> FermatWitness:
    n = p ** ell
    check_modulus(n)
    depth = base.degree if depth_budget is None else depth_budget
    k_budget = env_budget(64) if k_budget is None else k_budget
    try:
        i, j, r = _local_relation(base.minpoly, p, ell, depth, k_budget)
        return certify(base, n, i, j, r).canonical()
    except _RecursionFailed as exc:
        if not fallback:
            raise SearchBudgetExceeded(str(exc)) from exc
        log.info("prime-power recursion failed for n=%d (%s); using graph search", n, exc)
    from .graph import graph_witness

    return graph_witness(base, n)


# --- coprime composition -------------------------------------------------------

def _stretch(w: FermatWitness, shift: int, e: int) -> tuple[IntPoly, IntPoly]:
    """(q, R) with x^shift (x^e - 1) - w.n q = R m, from w via a geometric sum."""
    G = geometric(w.period, e // w.period).shift(shift - w.j)
    return w.p * G, w.r * G


def combine_coprime(w1: FermatWitness, w2: FermatWitness, shift_budget: int | None = None) -> FermatWitness:
    """Witness for n1 n2 with period lcm of the two periods.

    Shifts below max(j1, j2) are tried with the membership oracle; at max(j1, j2) a
    CRT combination of the two certificates always succeeds.
    """
    n1, n2 = w1.n, w2.n
    check_modulus(n1)
    check_modulus(n2)
    if gcd(n1, n2) != 1:
        raise PreconditionViolated(f"moduli {n1} and {n2} are not coprime")
    if w1.minpoly != w2.minpoly:
        raise PreconditionViolated("witnesses over different bases")
    base = w1.base
    n = n1 * n2
    e = lcm(w1.period, w2.period)
    lo, hi = min(w1.j, w2.j), max(w1.j, w2.j)
    budget = env_budget(4 * base.degree * n) if shift_budget is None else shift_budget
    for t in range(lo, min(hi, lo + budget)):
        q = IntPoly.binomial(t + e, t)
        res = member_nZbeta(q, base, n, max(t + e, default_budget_for(base, n)))
        if res.member:
            return certify(base, n, t + e, t, res.r)
    q1, r1 = _stretch(w1, hi, e)
    q2, r2 = _stretch(w2, hi, e)
    u1 = pow(n1, -1, n2)  # u1 n1 + u2 n2 = 1
    u2 = (1 - u1 * n1) // n2
    r = r2 * (u1 * n1) + r1 * (u2 * n2)
    return certify(base, n, hi + e, hi, r)


def default_budget_for(base: BaseSpec, n: int) -> int:
    return 2 * base.degree * n


# --- dispatcher ---------------------------------------------------------------

def find_witness(base: BaseSpec, n: int, method: Method = "auto") -> FermatWitness:
    check_modulus(n)
    if method == "walk":
        return coprime_walk(base, n).canonical()
    if method == "graph":
        from .graph import graph_witness

        return graph_witness(base, n)
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    result = None
    for p, ell in factorize(n):
        w = prime_power_witness(base, p, ell)
        result = w if result is None else combine_coprime(result, w)
    return result.canonical()


# --- densification ------------------------------------------------------------

def densify(w: FermatWitness, factor: float = 2) -> FermatWitness:
    """Telescope w until deg p < factor (i - j), with r reduced into [0, n).

    Multiplying by 1 + x^e + ... + x^(s e) (e = i - j) turns the witness into one with
    i' = i + s e and the same j. After reducing r, every coefficient of p is bounded
    by max|a_i| (deg m + 1), independently of n.
    """
    if factor <= 1:
        raise ValueError("factor must exceed 1")
    e = w.period
    s = 0
    while True:
        G = geometric(e, s + 1)
        cand = certify(w.base, w.n, w.j + (s + 1) * e, w.j, w.r * G)
        if cand.p.degree < factor * cand.period:
            if s == 0 and w.p.degree < factor * e and w.r == cand.r:
                return w
            return cand
        s += 1
