"""Edge moving, pendant stripping and B/C classification of bicyclic hypergraphs."""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from typing import Optional, Sequence

from .constructors import FamilySpec
from .errors import (
    IllegalMove,
    NotBicyclic,
    NotLinear,
    ResultDuplicateEdge,
    ResultNotLinear,
    UnrecognizedCore,
)
from .hypergraph import (
    BICYCLIC,
    Hypergraph,
    is_linear,
    structure_class,
    uniformity,
    zagreb_index,
)


@dataclass(frozen=True)
class MoveSpec:
    u: int
    v: int
    moved_edges: tuple[int, ...]

    @property
    def t(self) -> int:
        return len(self.moved_edges)


@dataclass(frozen=True)
class ClassifyResult:
    spec: FamilySpec
    core_edge_count: int
    notes: tuple[str, ...] = field(default=())


def move_edges(h: Hypergraph, move: MoveSpec) -> tuple[Hypergraph, int]:
    """Replace each moved edge ``e`` by ``(e - {u}) + {v}``.

    Returns the new hypergraph and its Zagreb index minus that of ``h``.
    Raises if the move is malformed or the result would stop being a linear
    set of distinct edges.
    """
    if not is_linear(h):
        raise NotLinear("move_edges needs a linear hypergraph")
    u, v, idx = move.u, move.v, move.moved_edges
    if not (0 <= u < h.n and 0 <= v < h.n) or u == v:
        raise IllegalMove(f"need two distinct vertices in 0..{h.n - 1}, got u={u}, v={v}")
    if not idx or len(set(idx)) != len(idx):
        raise IllegalMove("moved_edges must be a non-empty list of distinct edge indices")
    if any(not 0 <= i < h.m for i in idx):
        raise IllegalMove("edge index out of range")
    moved = set(idx)
    new_edges = []
    for i, e in enumerate(h.edges):
        if i not in moved:
            new_edges.append(e)
            continue
        if u not in e:
            raise IllegalMove(f"edge {list(e)} does not contain u={u}")
        if v in e:
            raise IllegalMove(f"edge {list(e)} already contains v={v}")
        new_edges.append(tuple(sorted([w for w in e if w != u] + [v])))
    new_edges.sort()
    if any(a == b for a, b in zip(new_edges, new_edges[1:])):
        raise ResultDuplicateEdge("moving would create a repeated edge")
    result = Hypergraph(h.n, tuple(new_edges))
    if not is_linear(result):
        raise ResultNotLinear("moving would break linearity")
    return result, zagreb_index(result) - zagreb_index(h)


def _densify(n: int, edges: list[tuple[int, ...]], alive: Sequence[bool]) -> Hypergraph:
    index = {}
    for w in range(n):
        if alive[w]:
            index[w] = len(index)
    return Hypergraph(len(index), tuple(sorted(tuple(index[w] for w in e) for e in edges)))


def strip_pendant_edges(h: Hypergraph, rng: Optional[random.Random] = None) -> tuple[Hypergraph, int]:
    """Delete pendant edges (and their cored vertices) until none remain.

    An edge left with every vertex cored is the last edge of a hanging
    hypertree and is deleted too.  Surviving vertices keep their relative
    order.  With ``rng`` the removal order is randomized; the core does not
    depend on it.
    """
    edges = list(h.edges)
    deg = list(h.degrees)
    alive = [True] * h.n
    removed = 0
    while True:
        cands = []
        for i, e in enumerate(edges):
            cored = sum(1 for w in e if deg[w] == 1)
            if cored >= len(e) - 1:
                cands.append(i)
        if not cands:
            break
        picks = [rng.choice(cands)] if rng is not None else cands[:1]
        for i in picks:
            e = edges.pop(i)
            for w in e:
                deg[w] -= 1
                if deg[w] == 0:
                    alive[w] = False
            removed += 1
    return _densify(h.n, edges, alive), removed


def _incidence_core_graph(core: Hypergraph) -> dict[tuple[str, int], list[tuple[str, int]]]:
    """Incidence graph of ``core`` with cored vertices dropped."""
    deg = core.degrees
    adj: dict[tuple[str, int], list[tuple[str, int]]] = {}
    for i, e in enumerate(core.edges):
        adj.setdefault(("e", i), [])
        for w in e:
            if deg[w] >= 2:
                adj.setdefault(("v", w), [])
                adj[("e", i)].append(("v", w))
                adj[("v", w)].append(("e", i))
    return adj


def _walk(adj, start, first):
    """Follow degree-2 nodes from ``start`` through ``first``.

    Returns ``(end, length, last)`` where ``last`` is the node before ``end``.
    """
    prev, cur, length = start, first, 1
    while len(adj[cur]) == 2:
        a, b = adj[cur]
        prev, cur = cur, (b if a == prev else a)
        length += 1
    return cur, length, prev


def _spec(family, variant, p, q, l, core, k):
    spec = FamilySpec(family, variant, p, q, l)
    if spec.core_edges != core.m or not spec.is_legal(k):
        raise UnrecognizedCore(f"recovered {spec.label()} does not fit a {core.m}-edge core for k={k}")
    return spec


def classify_bicyclic(h: Hypergraph) -> ClassifyResult:
    """Name the B/C family, variant and ``(p, q, l)`` of a linear bicyclic hypergraph.

    After stripping hanging hypertrees, the incidence graph of the core
    (vertex nodes of degree >= 2 plus edge nodes) has cyclomatic number 2:
    either two cycles joined at a node or by a path (family B), or three
    paths between two branch nodes (family C).  Branch nodes that are
    vertices mean joint attachments; branch nodes that are edges mean the
    path enters at a cored position of that edge.
    """
    if structure_class(h) != BICYCLIC:
        raise NotBicyclic("hypergraph is not bicyclic")
    k = uniformity(h)
    core, pendants = strip_pendant_edges(h)
    adj = _incidence_core_graph(core)
    n_nodes = len(adj)
    n_links = sum(len(x) for x in adj.values()) // 2
    if n_links - n_nodes + 1 != 2 or any(len(x) < 2 for x in adj.values()):
        raise UnrecognizedCore("core incidence graph is not a bicyclic graph of minimum degree 2")
    branch = sorted(node for node, nb in adj.items() if len(nb) >= 3)
    notes: list[str] = []

    if len(branch) == 1:
        (x,) = branch
        if len(adj[x]) != 4:
            raise UnrecognizedCore("single branch node must have degree 4")
        loops = []
        used = set()
        for y in adj[x]:
            if y in used:
                continue
            end, length, last = _walk(adj, x, y)
            if end != x:
                raise UnrecognizedCore("figure-eight walk did not return")
            loops.append(length // 2)
            used.update((y, last))
        if len(loops) != 2:
            raise UnrecognizedCore("degree-4 branch node does not carry two cycles")
        p, q = sorted(loops)
        if x[0] == "v":
            spec = _spec("B", 1, p, q, 0, core, k)
        else:
            # two hypercycles sharing one edge: theta with a one-edge middle path
            spec = _spec("C", 3, p - 1, 1, q - 1, core, k)
        return ClassifyResult(replace(spec, pendants=pendants), core.m, tuple(notes))

    if len(branch) != 2:
        raise UnrecognizedCore(f"expected 1 or 2 branch nodes, found {len(branch)}")
    x, y = branch
    walks_x = [_walk(adj, x, z) for z in adj[x]]
    loops_x = [length for end, length, _ in walks_x if end == x]
    bridges = [length for end, length, _ in walks_x if end == y]

    if len(bridges) == 3:
        a = sorted(bridges)
        kinds = (x[0], y[0])
        if kinds == ("v", "v"):
            p, q, l = (s // 2 for s in a)
            spec = _spec("C", 1, p, q, l, core, k)
        elif kinds == ("e", "e"):
            b1, b2, b3 = (s // 2 for s in a)
            if b1 == 1:
                spec = _spec("C", 3, b2 - 1, 2, b3 - 1, core, k)
            else:
                spec = _spec("C", 3, b1 - 1, b2 + 1, b3 - 1, core, k)
        else:
            a1, a2, a3 = ((s - 1) // 2 for s in a)
            if a1 == 0:
                spec = _spec("C", 2, a2, 1, a3, core, k)
            else:
                spec = _spec("C", 2, a1, a2 + 1, a3, core, k)
        return ClassifyResult(replace(spec, pendants=pendants), core.m, tuple(notes))

    if len(bridges) != 1 or len(loops_x) != 2:
        raise UnrecognizedCore("branch nodes are neither a theta nor a dumbbell")
    walks_y = [_walk(adj, y, z) for z in adj[y]]
    loops_y = [length for end, length, _ in walks_y if end == y]
    if len(loops_y) != 2:
        raise UnrecognizedCore("second branch node carries no cycle")
    cyc_x, cyc_y = loops_x[0] // 2, loops_y[0] // 2
    bridge = bridges[0]
    kinds = (x[0], y[0])
    if kinds == ("v", "v"):
        p, q = sorted((cyc_x, cyc_y))
        spec = _spec("B", 1, p, q, bridge // 2, core, k)
    elif kinds == ("e", "e"):
        p, q = sorted((cyc_x, cyc_y))
        spec = _spec("B", 3, p, q, bridge // 2 - 1, core, k)
    else:
        joint_cyc, cored_cyc = (cyc_x, cyc_y) if x[0] == "v" else (cyc_y, cyc_x)
        if joint_cyc > cored_cyc:
            notes.append("roles-swapped: the joint-attached cycle is the longer one")
        p, q = sorted((joint_cyc, cored_cyc))
        spec = _spec("B", 2, p, q, (bridge - 1) // 2, core, k)
    return ClassifyResult(replace(spec, pendants=pendants), core.m, tuple(notes))
