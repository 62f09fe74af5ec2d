"""Immutable hypergraph value type and the basic measurements on it.

Vertices are dense integer ids ``0..n-1``; an edge is a strictly increasing
tuple of vertex ids.  Every :class:`Hypergraph` is normalized: edges sorted
internally and the edge list sorted lexicographically.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .errors import (
    DuplicateEdge,
    DuplicateVertexInEdge,
    EdgeTooSmall,
    NotConnected,
    NotLinear,
    NotUniform,
    VertexOutOfRange,
)

Edge = tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    n: int
    edges: tuple[Edge, ...] = ()

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return tuple(deg)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """For each vertex, the indices of the edges containing it."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, e in enumerate(self.edges):
            for v in e:
                inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    def relabel(self, perm: Sequence[int]) -> "Hypergraph":
        """Return the hypergraph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of range(n)")
        return from_edges(self.n, [[perm[v] for v in e] for e in self.edges])

    def __str__(self) -> str:
        return f"Hypergraph(n={self.n}, m={self.m}, edges={[list(e) for e in self.edges]})"


@dataclass(frozen=True)
class DegreeStats:
    histogram: dict[int, int] = field(default_factory=dict)
    max_degree: int = 0
    total_vertices: int = 0
    total_degree: int = 0


@dataclass(frozen=True)
class StructureClass:
    """Connected k-uniform class keyed by ``deficit = m(k-1) + 1 - n``."""

    deficit: int

    @property
    def name(self) -> str:
        return _CLASS_NAMES.get(self.deficit, f"other({self.deficit})")

    def __str__(self) -> str:
        return self.name

    @classmethod
    def parse(cls, text: str) -> "StructureClass":
        text = text.strip().lower()
        for d, name in _CLASS_NAMES.items():
            if text == name:
                return cls(d)
        if text.startswith("other(") and text.endswith(")"):
            return cls(int(text[6:-1]))
        raise ValueError(f"unknown structure class {text!r}")


_CLASS_NAMES = {0: "hypertree", 1: "unicyclic", 2: "bicyclic"}
HYPERTREE = StructureClass(0)
UNICYCLIC = StructureClass(1)
BICYCLIC = StructureClass(2)


def from_edges(n: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
    """Validate and normalize an edge list into a :class:`Hypergraph`."""
    if n < 0:
        raise VertexOutOfRange(f"negative vertex count {n}")
    out = []
    for raw in edges:
        e = tuple(sorted(int(v) for v in raw))
        if len(e) < 2:
            raise EdgeTooSmall(f"edge {list(e)} has fewer than 2 vertices")
        if e[0] < 0 or e[-1] >= n:
            raise VertexOutOfRange(f"edge {list(e)} has a vertex outside 0..{n - 1}")
        if any(e[i] == e[i + 1] for i in range(len(e) - 1)):
            raise DuplicateVertexInEdge(f"edge {list(e)} repeats a vertex")
        out.append(e)
    out.sort()
    for a, b in zip(out, out[1:]):
        if a == b:
            raise DuplicateEdge(f"edge {list(a)} appears twice")
    return Hypergraph(n, tuple(out))


def degree(h: Hypergraph, v: int) -> int:
    if not 0 <= v < h.n:
        raise VertexOutOfRange(f"vertex {v} not in 0..{h.n - 1}")
    return h.degrees[v]


def degree_stats(h: Hypergraph) -> DegreeStats:
    hist = Counter(h.degrees)
    return DegreeStats(
        histogram=dict(sorted(hist.items())),
        max_degree=max(hist) if hist else 0,
        total_vertices=h.n,
        total_degree=sum(h.degrees),
    )


def zagreb_index(h: Hypergraph) -> int:
    """Sum of squared vertex degrees."""
    return sum(d * d for d in h.degrees)


def uniformity(h: Hypergraph) -> Optional[int]:
    sizes = {len(e) for e in h.edges}
    return sizes.pop() if len(sizes) == 1 else None


def is_linear(h: Hypergraph) -> bool:
    seen: set[tuple[int, int]] = set()
    for e in h.edges:
        for i in range(len(e)):
            for j in range(i + 1, len(e)):
                pair = (e[i], e[j])
                if pair in seen:
                    return False
                seen.add(pair)
    return True


def is_connected(h: Hypergraph) -> bool:
    if h.n <= 1:
        return True
    inc = h.incidence
    seen = [False] * h.n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for ei in inc[v]:
            for w in h.edges[ei]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
    return count == h.n


def deficit(h: Hypergraph, k: int) -> int:
    return h.m * (k - 1) + 1 - h.n


def structure_class(h: Hypergraph) -> StructureClass:
    k = uniformity(h)
    if k is None:
        raise NotUniform("structure class needs a k-uniform hypergraph with at least one edge")
    if not is_linear(h):
        raise NotLinear("structure class needs a linear hypergraph")
    if not is_connected(h):
        raise NotConnected("structure class needs a connected hypergraph")
    return StructureClass(deficit(h, k))


def girth(h: Hypergraph) -> Optional[int]:
    """Length of the shortest Berge cycle, or ``None`` for an acyclic hypergraph.

    BFS over the bipartite incidence graph from every node; the hypergraph
    girth is half the shortest incidence cycle.
    """
    if not is_linear(h):
        raise NotLinear("girth is only defined here for linear hypergraphs")
    n = h.n
    # incidence graph nodes: vertices 0..n-1, edges n..n+m-1
    adj: list[list[int]] = [[] for _ in range(n + h.m)]
    for i, e in enumerate(h.edges):
        for v in e:
            adj[v].append(n + i)
            adj[n + i].append(v)
    best = None
    for root in range(n + h.m):
        if not adj[root]:
            continue
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if best is not None and 2 * dist[x] >= best:
                break
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    length = dist[x] + dist[y] + 1
                    if best is None or length < best:
                        best = length
    return None if best is None else best // 2


def cored_vertices(h: Hypergraph) -> set[int]:
    return {v for v, d in enumerate(h.degrees) if d == 1}


def pendant_edges(h: Hypergraph) -> set[int]:
    """Indices of edges holding exactly ``|e| - 1`` cored vertices.

    An isolated edge (every vertex cored) is not pendant.
    """
    deg = h.degrees
    return {
        i for i, e in enumerate(h.edges) if sum(1 for v in e if deg[v] == 1) == len(e) - 1
    }
