"""Isomorph-free generation of connected linear k-uniform hypergraphs.

Hypergraphs are grown one edge at a time.  A new edge reuses ``j >= 1``
existing vertices, no two of them in a common edge (this keeps the result
linear and connected), and raises the deficit ``m(k-1) + 1 - n`` by
``j - 1``.  Because deficits never decrease along the way, branches whose
deficit already exceeds the target are cut.  Every connected hypergraph
loses an edge and stays connected, so growing one representative per
isomorphism class at each level reaches every class; each level is
deduplicated by canonical code.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional

from .canonical import DEFAULT_MAX_N, canonical_form
from .errors import GuardExceeded, IllegalParameters
from .hypergraph import Hypergraph, StructureClass, girth, zagreb_index

ENV_MAX_M = "HYPERZAGREB_MAX_M"
DEFAULT_GUARDS = {3: 6, 4: 5}
FALLBACK_GUARD = 4


def max_edges(k: int) -> int:
    """Edge-count guard for ``k``; the ``HYPERZAGREB_MAX_M`` variable overrides it."""
    env = os.environ.get(ENV_MAX_M)
    if env:
        try:
            value = int(env)
        except ValueError:
            raise IllegalParameters(f"{ENV_MAX_M} must be an integer, got {env!r}") from None
        if value < 1:
            raise IllegalParameters(f"{ENV_MAX_M} must be positive")
        return value
    return DEFAULT_GUARDS.get(k, FALLBACK_GUARD)


def _check(k: int, m: int, allow_large: bool) -> None:
    if k < 3:
        raise IllegalParameters("enumeration needs k >= 3")
    if m < 1:
        raise IllegalParameters("enumeration needs m >= 1")
    if not allow_large and m > max_edges(k):
        raise GuardExceeded(f"m={m} exceeds the guard {max_edges(k)} for k={k}; "
                            f"raise it with {ENV_MAX_M} or allow_large=True")


def _extensions(h: Hypergraph, k: int, budget: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """Yield ``(reused vertices, j - 1)`` for every legal new edge on ``h``."""
    n = h.n
    inc = [set(x) for x in h.incidence]
    max_j = min(k, budget + 1, n)

    def rec(start: int, chosen: list[int], blocked: set[int]):
        if chosen:
            yield tuple(chosen), len(chosen) - 1
        if len(chosen) == max_j:
            return
        for v in range(start, n):
            if inc[v] & blocked:
                continue
            chosen.append(v)
            yield from rec(v + 1, chosen, blocked | inc[v])
            chosen.pop()

    yield from rec(0, [], set())


def _grow(args) -> list[tuple[bytes, Hypergraph, int]]:
    h, k, d, target, remaining = args
    out = []
    for reused, extra in _extensions(h, k, target - d):
        nd = d + extra
        if nd + remaining * (k - 1) < target:
            continue
        fresh = tuple(range(h.n, h.n + k - len(reused)))
        child = Hypergraph(h.n + len(fresh), tuple(sorted(h.edges + (reused + fresh,))))
        code, rep = canonical_form(child, max_n=max(DEFAULT_MAX_N, child.n))
        out.append((code, rep, nd))
    return out


@lru_cache(maxsize=64)
def _levels(k: int, m: int, target: int, workers: int) -> tuple[tuple[bytes, Hypergraph], ...]:
    first = Hypergraph(k, (tuple(range(k)),))
    code, rep = canonical_form(first)
    level = {code: (rep, 0)}
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for size in range(2, m + 1):
            remaining = m - size
            jobs = [(rep, k, d, target, remaining) for _, (rep, d) in sorted(level.items())]
            if pool is None:
                results = map(_grow, jobs)
            else:
                results = pool.map(_grow, jobs, chunksize=max(1, len(jobs) // (4 * workers)))
            nxt: dict[bytes, tuple[Hypergraph, int]] = {}
            for batch in results:
                for code, rep, d in batch:
                    nxt.setdefault(code, (rep, d))
            level = nxt
    finally:
        if pool is not None:
            pool.shutdown()
    return tuple((code, rep) for code, (rep, d) in sorted(level.items()) if d == target)


def enumerate_linear(k: int, m: int, cls: StructureClass, girth_filter: Optional[int] = None,
                     workers: int = 1, allow_large: bool = False) -> Iterator[Hypergraph]:
    """One canonical representative per isomorphism class, in canonical-code order.

    Covers connected linear ``k``-uniform hypergraphs with ``m`` edges in
    structure class ``cls`` (and girth ``girth_filter`` when given).
    """
    for _, h in enumerate_with_codes(k, m, cls, girth_filter, workers, allow_large):
        yield h


def enumerate_with_codes(k: int, m: int, cls: StructureClass, girth_filter: Optional[int] = None,
                         workers: int = 1, allow_large: bool = False) -> Iterator[tuple[bytes, Hypergraph]]:
    _check(k, m, allow_large)
    if workers < 1:
        raise IllegalParameters("workers must be >= 1")
    if cls.deficit < 0 or cls.deficit > (m - 1) * (k - 1):
        return
    for code, h in _levels(k, m, cls.deficit, workers):
        if girth_filter is None or girth(h) == girth_filter:
            yield code, h


@dataclass
class EnumerationReport:
    k: int
    m: int
    n: int
    cls: StructureClass
    girth: Optional[int]
    count: int
    min_zagreb: Optional[int]
    max_zagreb: Optional[int]
    min_witness: Optional[Hypergraph]
    max_witness: Optional[Hypergraph]
    min_classes: int = 0
    max_classes: int = 0
    duration: float = 0.0
    zagreb_values: dict[int, int] = field(default_factory=dict)


def extremal_scan(k: int, m: int, cls: StructureClass, girth_filter: Optional[int] = None,
                  workers: int = 1, allow_large: bool = False) -> EnumerationReport:
    """Exact minimum and maximum Zagreb index over an enumerated class.

    Ties between extremal witnesses go to the least canonical code, which is
    the first one met because the stream is code-ordered.
    """
    start = time.perf_counter()
    values: dict[int, int] = {}
    lo = hi = None
    for _, h in enumerate_with_codes(k, m, cls, girth_filter, workers, allow_large):
        z = zagreb_index(h)
        values[z] = values.get(z, 0) + 1
        if lo is None or z < lo[0]:
            lo = (z, h)
        if hi is None or z > hi[0]:
            hi = (z, h)
    n = m * (k - 1) + 1 - cls.deficit
    return EnumerationReport(
        k=k, m=m, n=n, cls=cls, girth=girth_filter,
        count=sum(values.values()),
        min_zagreb=lo[0] if lo else None,
        max_zagreb=hi[0] if hi else None,
        min_witness=lo[1] if lo else None,
        max_witness=hi[1] if hi else None,
        min_classes=values[lo[0]] if lo else 0,
        max_classes=values[hi[0]] if hi else 0,
        duration=time.perf_counter() - start,
        zagreb_values=dict(sorted(values.items())),
    )
