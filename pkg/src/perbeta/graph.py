"""The witness graph G(m, n) on Z_n^d x {A, B, C}.

A vertex (z_d, ..., z_1; phase) is the carry left after processing the leading
columns of a product r(x) m(x) reduced mod n. An edge labelled k adds k m(x) and
shifts down by one column; the column leaving must be 0, or the +1 digit (phase
A -> B), or the -1 digit (phase B -> C). A path from (0,...,0; A) to (0,...,0; C)
therefore spells out r(x) with r(x) m(x) = x^i - x^j (mod n).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product
from math import gcd
from typing import Iterator, Literal, Sequence

from .errors import CertificateError, InvalidPath, NoPath, SizeBudgetExceeded
from .field import BaseSpec
from .fermat import env_budget
from .poly import IntPoly
from .witness import FermatWitness, certify, check_modulus

Phase = Literal["A", "B", "C"]

_TRANSITIONS = {"A": (("same", "A"), (1, "B")), "B": (("same", "B"), (-1, "C")), "C": (("same", "C"),)}


@dataclass(frozen=True, order=True)
class GraphVertex:
    residues: tuple[int, ...]  # (z_d, ..., z_1)
    phase: Phase

    def __str__(self) -> str:
        return ",".join(map(str, self.residues)) + f",{self.phase}"

    @classmethod
    def origin(cls, d: int, phase: Phase = "A") -> GraphVertex:
        return cls((0,) * d, phase)


@dataclass(frozen=True)
class GraphEdge:
    source: GraphVertex
    target: GraphVertex
    label: int


@dataclass(frozen=True)
class WitnessPath:
    vertices: tuple[GraphVertex, ...]
    labels: tuple[int, ...]
    k1: int  # step index of the A -> B edge
    k2: int  # step index of the B -> C edge

    def __len__(self) -> int:
        return len(self.labels)

    @classmethod
    def from_labels(cls, base: BaseSpec, n: int, labels: Sequence[int]) -> WitnessPath:
        """Replay labels from (0,...,0; A), taking whichever edge each label gives."""
        d = base.degree
        v = GraphVertex.origin(d)
        vertices = [v]
        k1 = k2 = -1
        for step, k in enumerate(labels):
            nxt = _successor(v, k, base.minpoly, n)
            if nxt is None:
                raise InvalidPath(f"label {k} at step {step} gives no edge from {v}")
            if v.phase == "A" and nxt.phase == "B":
                k1 = step
            if v.phase == "B" and nxt.phase == "C":
                k2 = step
            v = nxt
            vertices.append(v)
        return cls(tuple(vertices), tuple(labels), k1, k2)


def _shifted(residues: tuple[int, ...], k: int, a: Sequence[int], n: int) -> tuple[int, tuple[int, ...]]:
    """(top, new residues) for y + k m: top = y_d + k a_d, z_1 = k a_0, z_(i+1) = y_i + k a_i."""
    d = len(residues)
    top = (residues[0] + k * a[d]) % n
    new = tuple(
        ((residues[idx + 1] if idx + 1 < d else 0) + k * a[d - 1 - idx]) % n for idx in range(d)
    )
    return top, new


def _successor(v: GraphVertex, k: int, m: IntPoly, n: int) -> GraphVertex | None:
    top, new = _shifted(v.residues, k, m.coeffs, n)
    if top == 0:
        return GraphVertex(new, v.phase)
    if v.phase == "A" and top == 1 % n:
        return GraphVertex(new, "B")
    if v.phase == "B" and top == n - 1:
        return GraphVertex(new, "C")
    return None


def neighbors(v: GraphVertex, base: BaseSpec, n: int) -> list[tuple[int, GraphVertex]]:
    """All (label, successor) pairs, trying every k in [0, n)."""
    out = []
    for k in range(n):
        w = _successor(v, k, base.minpoly, n)
        if w is not None:
            out.append((k, w))
    return out


def _fast_neighbors(v: GraphVertex, a: Sequence[int], n: int) -> list[tuple[int, GraphVertex]]:
    """Same as neighbors() but solves k a_d = t - y_d (mod n) instead of scanning k."""
    d = len(v.residues)
    ad = a[d] % n
    g = gcd(ad, n)
    step = n // g
    inv = pow(ad // g, -1, step) if step > 1 else 0
    out = []
    for want, phase in _TRANSITIONS[v.phase]:
        t = 0 if want == "same" else want % n
        rhs = (t - v.residues[0]) % n
        if rhs % g:
            continue
        k0 = (rhs // g) * inv % step if step > 1 else 0
        for u in range(g):
            k = k0 + u * step
            _, new = _shifted(v.residues, k, a, n)
            out.append((k, GraphVertex(new, phase)))
    out.sort(key=lambda kv: kv[0])
    return out


def validate_edge(u: GraphVertex, v: GraphVertex, k: int, base: BaseSpec, n: int) -> bool:
    return 0 <= k < n and _successor(u, k, base.minpoly, n) == v


def shortest_path(base: BaseSpec, n: int, max_states: int | None = None) -> WitnessPath:
    """Breadth-first search from (0,...,0; A) to (0,...,0; C).

    Vertices are expanded in discovery order with labels ascending, so the path
    returned is the lexicographically smallest label sequence among shortest paths.
    """
    check_modulus(n)
    max_states = env_budget(5_000_000) if max_states is None else max_states
    d = base.degree
    a = base.minpoly.coeffs
    start = GraphVertex.origin(d, "A")
    goal = GraphVertex.origin(d, "C")
    parent: dict[GraphVertex, tuple[GraphVertex, int] | None] = {start: None}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for k, w in _fast_neighbors(v, a, n):
            if w in parent:
                continue
            parent[w] = (v, k)
            if w == goal:
                return _unwind(parent, goal)
            if len(parent) > max_states:
                raise NoPath(f"state budget {max_states} exceeded for n={n}", len(parent))
            queue.append(w)
    raise NoPath(
        f"no path from {start} to {goal} in G(m, {n}); m is probably not a minimal polynomial",
        len(parent),
    )


def _unwind(parent: dict, goal: GraphVertex) -> WitnessPath:
    vertices = [goal]
    labels = []
    node = parent[goal]
    while node is not None:
        v, k = node
        vertices.append(v)
        labels.append(k)
        node = parent[v]
    vertices.reverse()
    labels.reverse()
    k1 = next(s for s in range(len(labels)) if vertices[s].phase == "A" and vertices[s + 1].phase == "B")
    k2 = next(s for s in range(len(labels)) if vertices[s].phase == "B" and vertices[s + 1].phase == "C")
    return WitnessPath(tuple(vertices), tuple(labels), k1, k2)


def path_to_witness(path: WitnessPath, base: BaseSpec, n: int) -> FermatWitness:
    """Read r(x) = sum c_k x^(s-1-k) off the labels and certify it.

    The +1 produced at step k1 lands on x^(s-1-k1+d), the -1 at step k2 on
    x^(s-1-k2+d).
    """
    check_modulus(n)
    d = base.degree
    s = len(path.labels)
    vs = path.vertices
    if s == 0 or len(vs) != s + 1:
        raise InvalidPath("path must have one more vertex than labels")
    if vs[0] != GraphVertex.origin(d, "A") or vs[-1] != GraphVertex.origin(d, "C"):
        raise InvalidPath("path must run from (0,...,0;A) to (0,...,0;C)")
    for step, (u, v, k) in enumerate(zip(vs, vs[1:], path.labels)):
        if not validate_edge(u, v, k, base, n):
            raise InvalidPath(f"step {step}: {u} -{k}-> {v} is not an edge of G(m, {n})")
    ups = [t for t in range(s) if vs[t].phase == "A" and vs[t + 1].phase == "B"]
    downs = [t for t in range(s) if vs[t].phase == "B" and vs[t + 1].phase == "C"]
    if len(ups) != 1 or len(downs) != 1:
        raise InvalidPath("path needs exactly one A->B and one B->C transition")
    k1, k2 = ups[0], downs[0]
    c = IntPoly(reversed(path.labels))
    i, j = s - 1 - k1 + d, s - 1 - k2 + d
    try:
        return certify(base, n, i, j, c).canonical()
    except CertificateError as exc:
        raise InvalidPath(f"labels do not certify x^{i} - x^{j}: {exc}") from exc


def graph_witness(base: BaseSpec, n: int) -> FermatWitness:
    return path_to_witness(shortest_path(base, n), base, n)


def iter_edges(base: BaseSpec, n: int, scope: Literal["reachable", "full"] = "reachable") -> Iterator[GraphEdge]:
    d = base.degree
    a = base.minpoly.coeffs
    if scope == "full":
        for phase in "ABC":
            for res in product(range(n), repeat=d):
                v = GraphVertex(res, phase)
                for k, w in _fast_neighbors(v, a, n):
                    yield GraphEdge(v, w, k)
        return
    if scope != "reachable":
        raise ValueError(f"unknown scope {scope!r}")
    start = GraphVertex.origin(d, "A")
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for k, w in _fast_neighbors(v, a, n):
            yield GraphEdge(v, w, k)
            if w not in seen:
                seen.add(w)
                queue.append(w)


_COLORS = {"A": "yellow", "B": "green", "C": "cyan"}


def export_dot(
    base: BaseSpec,
    n: int,
    scope: Literal["reachable", "full"] = "reachable",
    max_vertices: int = 20_000,
) -> str:
    """Deterministic DOT text; vertices appear in discovery order."""
    check_modulus(n)
    size = 3 * n ** base.degree
    if size > max_vertices:
        raise SizeBudgetExceeded(f"G(m, {n}) has up to {size} vertices, budget is {max_vertices}")
    order: dict[GraphVertex, None] = {}
    edges = []
    if scope == "full":
        for phase in "ABC":
            for res in product(range(n), repeat=base.degree):
                order[GraphVertex(res, phase)] = None
    else:
        order[GraphVertex.origin(base.degree, "A")] = None
    for e in iter_edges(base, n, scope):
        order.setdefault(e.source, None)
        order.setdefault(e.target, None)
        edges.append(e)
    lines = [
        "digraph G {",
        f'  label="G(m, {n}) for m(x) = {base.minpoly}";',
        "  rankdir=LR;",
        '  node [shape=box, style="rounded,filled"];',
    ]
    for v in order:
        lines.append(f'  "{v}" [fillcolor={_COLORS[v.phase]}];')
    for e in edges:
        lines.append(f'  "{e.source}" -> "{e.target}" [label="{e.label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
