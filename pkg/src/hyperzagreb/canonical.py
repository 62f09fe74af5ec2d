"""Canonical codes and isomorphism testing for small hypergraphs.

Degree-1 vertices are interchangeable inside their edge, so they are folded
into a per-edge count before the search; isolated vertices become a single
count.  What remains is searched by colour refinement on the bipartite
incidence graph plus individualization of vertex cells, keeping the
lexicographically least relabelled edge list.
"""

from __future__ import annotations

import struct

from .errors import TooLarge
from .hypergraph import Hypergraph

DEFAULT_MAX_N = 20
DEFAULT_LEAF_BUDGET = 200_000

_Reduced = tuple[tuple[int, tuple[int, ...]], ...]


def _rank(signatures):
    order = {s: i for i, s in enumerate(sorted(set(signatures)))}
    return [order[s] for s in signatures]


def _refine(vcol, ecol, vinc, evs):
    nv, ne = len(set(vcol)), len(set(ecol))
    while True:
        ecol = _rank([(ecol[e], tuple(sorted(vcol[v] for v in evs[e]))) for e in range(len(evs))])
        vcol = _rank([(vcol[v], tuple(sorted(ecol[e] for e in vinc[v]))) for v in range(len(vinc))])
        nv2, ne2 = len(set(vcol)), len(set(ecol))
        if nv2 == nv and ne2 == ne:
            return vcol, ecol
        nv, ne = nv2, ne2


def _reduce(h: Hypergraph):
    deg = h.degrees
    keep = [v for v in range(h.n) if deg[v] >= 2]
    index = {v: i for i, v in enumerate(keep)}
    labels, evs = [], []
    for e in h.edges:
        labels.append(sum(1 for v in e if deg[v] == 1))
        evs.append(tuple(index[v] for v in e if deg[v] >= 2))
    isolated = sum(1 for d in deg if d == 0)
    return len(keep), labels, evs, isolated


def _canonical_reduced(h: Hypergraph, budget: int) -> tuple[int, _Reduced]:
    r, labels, evs, isolated = _reduce(h)
    vinc: list[list[int]] = [[] for _ in range(r)]
    for i, vs in enumerate(evs):
        for v in vs:
            vinc[v].append(i)
    vcol0 = [0] * r
    ecol0 = _rank([(labels[i], len(evs[i])) for i in range(len(evs))])
    best: list = [None]
    leaves = [0]

    def search(vcol, ecol):
        vcol, ecol = _refine(vcol, ecol, vinc, evs)
        if len(set(vcol)) == r:
            leaves[0] += 1
            if leaves[0] > budget:
                raise TooLarge(f"canonical search exceeded {budget} leaves")
            code = tuple(sorted((labels[i], tuple(sorted(vcol[v] for v in evs[i]))) for i in range(len(evs))))
            if best[0] is None or code < best[0]:
                best[0] = code
            return
        sizes: dict[int, int] = {}
        for c in vcol:
            sizes[c] = sizes.get(c, 0) + 1
        target = min(c for c, s in sizes.items() if s > 1)
        for v in range(r):
            if vcol[v] == target:
                child = [2 * c for c in vcol]
                child[v] -= 1
                search(child, ecol)

    search(vcol0, ecol0)
    return isolated, best[0] if best[0] is not None else ()


def _encode(n: int, isolated: int, reduced: _Reduced) -> bytes:
    flat = [n, isolated, len(reduced)]
    for label, vs in reduced:
        flat += [label, len(vs), *vs]
    return struct.pack(f">{len(flat)}H", *flat)


def _decode_to_hypergraph(n: int, isolated: int, reduced: _Reduced) -> Hypergraph:
    r = n - isolated - sum(label for label, _ in reduced)
    nxt = r
    edges = []
    for label, vs in reduced:
        edges.append(tuple(vs) + tuple(range(nxt, nxt + label)))
        nxt += label
    return Hypergraph(n, tuple(sorted(edges)))


def canonical_form(h: Hypergraph, max_n: int = DEFAULT_MAX_N,
                   budget: int = DEFAULT_LEAF_BUDGET) -> tuple[bytes, Hypergraph]:
    """Return ``(code, representative)``; isomorphic inputs give identical pairs."""
    if h.n > max_n:
        raise TooLarge(f"n={h.n} exceeds the canonical-labeling guard of {max_n}")
    isolated, reduced = _canonical_reduced(h, budget)
    return _encode(h.n, isolated, reduced), _decode_to_hypergraph(h.n, isolated, reduced)


def canonical_code(h: Hypergraph, max_n: int = DEFAULT_MAX_N) -> bytes:
    return canonical_form(h, max_n=max_n)[0]


def are_isomorphic(h1: Hypergraph, h2: Hypergraph, max_n: int = DEFAULT_MAX_N) -> bool:
    if h1.n != h2.n or h1.m != h2.m or sorted(h1.degrees) != sorted(h2.degrees):
        if max(h1.n, h2.n) > max_n:
            raise TooLarge(f"n exceeds the canonical-labeling guard of {max_n}")
        return False
    return canonical_code(h1, max_n) == canonical_code(h2, max_n)
