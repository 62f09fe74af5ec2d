"""Deterministic builders for hyperpaths, hypercycles and the bicyclic base families.

The dumbbell family ``B`` joins two hypercycles of lengths ``p`` and ``q``
through a hyperpath of length ``l``; its variants differ in whether each
cycle is entered at a degree-2 (joint) vertex or at a degree-1 (cored)
vertex.  The theta family ``C`` glues three hyperpaths of lengths ``p, q, l``
at their ends, variants 2 and 3 attaching path ends at cored positions
inside an edge.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, replace
from typing import Optional

from .errors import (
    IllegalParameters,
    LengthTooSmall,
    OutOfTheoremRange,
    UniformityMismatch,
    VertexOutOfRange,
)
from .hypergraph import Hypergraph, from_edges, uniformity


@dataclass(frozen=True)
class FamilySpec:
    family: str  # "B" or "C"
    variant: int
    p: int
    q: int
    l: int
    pendants: int = 0

    @property
    def core_edges(self) -> int:
        return self.p + self.q + self.l

    def core_vertices(self, k: int) -> int:
        return self.core_edges * (k - 1) - 1

    def is_legal(self, k: int) -> bool:
        p, q, l = self.p, self.q, self.l
        if k < 3 or self.pendants < 0:
            return False
        if self.family == "B":
            return self.variant in (1, 2, 3) and q >= p >= 3 and l >= 0
        if self.family != "C":
            return False
        if self.variant == 1:
            return (p == 1 and 1 < q <= l) or (1 < p <= q <= l)
        if self.variant == 2:
            return (q == 1 and 1 < p <= l) or (q > 1 and 1 <= p <= q - 1 <= l)
        if self.variant == 3:
            return (
                (q > 2 and 1 <= p <= q - 2 <= l)
                or (q == 2 and 1 <= p <= l)
                or (q == 1 and k > 3 and 1 < p <= l)
            )
        return False

    def validate(self, k: int) -> None:
        if not self.is_legal(k):
            raise IllegalParameters(f"{self.label()} is not a legal parameter set for k={k}")

    def label(self) -> str:
        s = f"{self.family}{self.variant}(p={self.p}, q={self.q}, l={self.l})"
        return s + (f"+{self.pendants} pendants" if self.pendants else "")


class _Builder:
    """Disjoint pieces glued by vertex identification, then densely relabelled."""

    def __init__(self, k: int):
        self.k = k
        self.n = 0
        self.edges: list[list[int]] = []
        self.parent: list[int] = []

    def vertex(self) -> int:
        self.parent.append(self.n)
        self.n += 1
        return self.n - 1

    def path(self, length: int) -> tuple[list[int], list[list[int]]]:
        joints = [self.vertex() for _ in range(length + 1)]
        edges = []
        for i in range(length):
            e = [joints[i], joints[i + 1]] + [self.vertex() for _ in range(self.k - 2)]
            edges.append(e)
        self.edges += edges
        return joints, edges

    def cycle(self, length: int) -> tuple[list[int], list[list[int]]]:
        joints = [self.vertex() for _ in range(length)]
        edges = []
        for i in range(length):
            e = [joints[i], joints[(i + 1) % length]] + [self.vertex() for _ in range(self.k - 2)]
            edges.append(e)
        self.edges += edges
        return joints, edges

    def _find(self, v: int) -> int:
        while self.parent[v] != v:
            self.parent[v] = self.parent[self.parent[v]]
            v = self.parent[v]
        return v

    def identify(self, a: int, b: int) -> None:
        ra, rb = self._find(a), self._find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)

    def build(self) -> Hypergraph:
        roots = sorted({self._find(v) for v in range(self.n)})
        index = {r: i for i, r in enumerate(roots)}
        edges = [[index[self._find(v)] for v in e] for e in self.edges]
        return from_edges(len(roots), edges)


def hyperpath(k: int, length: int) -> Hypergraph:
    """Joint vertices get ids ``0..length`` in path order, cored vertices follow."""
    if k < 2 or length < 0:
        raise IllegalParameters("hyperpath needs k >= 2 and length >= 0")
    n = length * (k - 1) + 1
    nxt = length + 1
    edges = []
    for i in range(length):
        edges.append([i, i + 1] + list(range(nxt, nxt + k - 2)))
        nxt += k - 2
    return from_edges(n, edges)


def hypercycle(k: int, length: int) -> Hypergraph:
    if k < 2:
        raise IllegalParameters("hypercycle needs k >= 2")
    if length < 3:
        raise LengthTooSmall(f"hypercycle length {length} < 3")
    nxt = length
    edges = []
    for i in range(length):
        edges.append([i, (i + 1) % length] + list(range(nxt, nxt + k - 2)))
        nxt += k - 2
    return from_edges(length * (k - 1), edges)


def b_base(spec: FamilySpec, k: int, attach: tuple[int, int] = (0, 0)) -> Hypergraph:
    """Dumbbell base ``B_i(p, l, q)`` without pendant edges.

    ``attach`` picks, by position, which eligible vertex of each cycle is
    glued to the path (joint vertices for degree-2 entry, cored vertices for
    degree-1 entry).  Every choice yields an isomorphic hypergraph.
    """
    if spec.family != "B":
        raise IllegalParameters("b_base needs a B-family spec")
    spec.validate(k)
    b = _Builder(k)
    j1, e1 = b.cycle(spec.p)
    j2, e2 = b.cycle(spec.q)
    pj, _ = b.path(spec.l)
    cored1 = [v for e in e1 for v in e[2:]]
    cored2 = [v for e in e2 for v in e[2:]]
    first = j1 if spec.variant in (1, 2) else cored1
    second = j2 if spec.variant == 1 else cored2
    try:
        x, y = first[attach[0]], second[attach[1]]
    except IndexError:
        raise IllegalParameters(f"attachment choice {attach} out of range") from None
    b.identify(x, pj[0])
    b.identify(y, pj[-1])
    return b.build()


def c_base(spec: FamilySpec, k: int) -> Hypergraph:
    """Theta base ``C_i(p, q, l)`` without pendant edges."""
    if spec.family != "C":
        raise IllegalParameters("c_base needs a C-family spec")
    spec.validate(k)
    b = _Builder(k)
    u, _ = b.path(spec.p)
    v, f = b.path(spec.q)
    w, _ = b.path(spec.l)
    if spec.variant == 1:
        b.identify(u[0], v[0])
        b.identify(u[0], w[0])
        b.identify(u[-1], v[-1])
        b.identify(u[-1], w[-1])
    elif spec.variant == 2:
        b.identify(u[0], v[0])
        b.identify(u[0], w[0])
        b.identify(u[-1], v[-1])
        b.identify(w[-1], f[-1][2])
    else:
        b.identify(u[0], v[0])
        b.identify(u[-1], v[-1])
        b.identify(w[0], f[0][2])
        # with q == 1 the two cored positions share f_1 and must differ
        b.identify(w[-1], f[-1][3] if spec.q == 1 else f[-1][2])
    return b.build()


def attach_pendant_edges(h: Hypergraph, v: int, count: int, k: int) -> Hypergraph:
    """Hang ``count`` new edges ``{v} + (k-1) fresh vertices`` at ``v``."""
    if not 0 <= v < h.n:
        raise VertexOutOfRange(f"vertex {v} not in 0..{h.n - 1}")
    if count < 0:
        raise IllegalParameters("pendant count must be >= 0")
    if h.m and uniformity(h) != k:
        raise UniformityMismatch(f"hypergraph is not {k}-uniform")
    if count == 0:
        return h
    edges = [list(e) for e in h.edges]
    nxt = h.n
    for _ in range(count):
        edges.append([v] + list(range(nxt, nxt + k - 1)))
        nxt += k - 1
    return from_edges(nxt, edges)


def hub(h: Hypergraph) -> int:
    """Lowest-id vertex of maximum degree: where family pendants attach."""
    deg = h.degrees
    return deg.index(max(deg))


def family_member(spec: FamilySpec, k: int) -> Hypergraph:
    """Base hypergraph of ``spec`` with ``spec.pendants`` pendant edges at its hub."""
    base = b_base(spec, k) if spec.family == "B" else c_base(spec, k)
    return attach_pendant_edges(base, hub(base), spec.pendants, k)


def extremal_b_spec(k: int, m: int, g: int) -> FamilySpec:
    if k < 3 or g < 3 or m < 2 * g:
        raise IllegalParameters(f"extremal_b needs k >= 3, g >= 3, m >= 2g (got k={k}, m={m}, g={g})")
    return FamilySpec("B", 1, g, g, 0, m - 2 * g)


def extremal_b(k: int, m: int, g: int) -> Hypergraph:
    """``B_1(g, 0, g)`` with ``m - 2g`` pendant edges at the degree-4 vertex."""
    return family_member(extremal_b_spec(k, m, g), k)


def extremal_c_spec(k: int, m: int, g: int) -> FamilySpec:
    if k < 3 or g < 3:
        raise IllegalParameters("extremal_c needs k >= 3 and g >= 3")
    if g % 2 == 0:
        if 2 * m < 3 * g:
            raise IllegalParameters(f"even girth {g} needs m >= 3g/2, got m={m}")
        h = g // 2
        return FamilySpec("C", 1, h, h, h, m - 3 * h)
    if 2 * m < 3 * g - 1:
        raise IllegalParameters(f"odd girth {g} needs m >= (3g-1)/2, got m={m}")
    lo = g // 2
    return FamilySpec("C", 2, lo, lo + 1, lo, m - g - lo)


def extremal_c(k: int, m: int, g: int) -> Hypergraph:
    return family_member(extremal_c_spec(k, m, g), k)


def global_max(k: int, m: int) -> Hypergraph:
    """``C_2(1, 2, 1)`` with ``m - 4`` pendants; extremality is claimed only for m >= 6."""
    if m < 4:
        raise IllegalParameters(f"global_max needs m >= 4, got {m}")
    if m < 6:
        warnings.warn(
            f"m={m} is below the range m >= 6 where this witness is proven maximal",
            OutOfTheoremRange,
            stacklevel=2,
        )
    return extremal_c(k, m, 3)


def min_bicyclic_spec(k: int, m: int) -> FamilySpec:
    if k < 3:
        raise IllegalParameters("min_bicyclic needs k >= 3")
    if m <= 3:
        raise IllegalParameters(f"no linear bicyclic {k}-uniform hypergraph has m={m} <= 3 edges")
    return FamilySpec("C", 3, 1, 2, m - 3)


def min_bicyclic(k: int, m: int) -> Hypergraph:
    """A maximum-degree-2 linear bicyclic hypergraph with ``m`` edges."""
    return c_base(min_bicyclic_spec(k, m), k)


def c1_odd_witness(k: int, m: int, g: int) -> Hypergraph:
    """``C_1(floor(g/2), ceil(g/2), ceil(g/2))`` with its pendants at a degree-3 vertex."""
    if g < 3 or g % 2 == 0:
        raise IllegalParameters("c1_odd_witness needs odd g >= 3")
    lo, hi = g // 2, g // 2 + 1
    if m < g + hi:
        raise IllegalParameters(f"needs m >= {g + hi}, got {m}")
    return family_member(FamilySpec("C", 1, lo, hi, hi, m - g - hi), k)


def c3_pendant_witness(k: int, m: int, p: int, q: int, l: int, at: Optional[int] = None) -> Hypergraph:
    """C_3 base with ``m - p - q - l`` pendants at a degree-2 vertex (lowest id by default)."""
    spec = FamilySpec("C", 3, p, q, l)
    base = c_base(spec, k)
    if m < spec.core_edges:
        raise IllegalParameters(f"needs m >= p+q+l = {spec.core_edges}")
    v = hub(base) if at is None else at
    if base.degrees[v] != 2:
        raise IllegalParameters(f"vertex {v} does not have degree 2")
    return attach_pendant_edges(base, v, m - spec.core_edges, k)


def with_pendants(spec: FamilySpec, pendants: int) -> FamilySpec:
    return replace(spec, pendants=pendants)
