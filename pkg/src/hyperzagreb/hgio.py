"""Reading and writing the ``.hg`` text format and its JSON equivalent.

A record is a header line ``k n m`` followed by ``m`` edge lines of sorted,
0-based vertex ids.  ``k = 0`` marks a non-uniform hypergraph.  Lines
starting with ``#`` are comments.  Several records in one stream are
separated by a blank line.  Text must end with a newline.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, Iterator, Union

from .errors import FormatError, InvalidHypergraph
from .hypergraph import Hypergraph, from_edges, uniformity


def dumps(h: Hypergraph) -> str:
    k = uniformity(h) or 0
    lines = [f"{k} {h.n} {h.m}"]
    lines += [" ".join(str(v) for v in e) for e in h.edges]
    return "\n".join(lines) + "\n"


def dumps_many(hs: Iterable[Hypergraph]) -> str:
    return "\n".join(dumps(h) for h in hs)


def _parse_record(lines: list[tuple[int, str]]) -> Hypergraph:
    lineno, header = lines[0]
    try:
        k, n, m = (int(x) for x in header.split())
    except ValueError:
        raise FormatError(f"line {lineno}: header must be 'k n m', got {header!r}") from None
    if k < 0 or n < 0 or m < 0:
        raise FormatError(f"line {lineno}: negative header value")
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"line {lineno}: header announces {m} edges, found {len(body)}")
    edges = []
    for ln, text in body:
        try:
            e = [int(x) for x in text.split()]
        except ValueError:
            raise FormatError(f"line {ln}: non-integer vertex id") from None
        if k and len(e) != k:
            raise FormatError(f"line {ln}: expected {k} vertex ids, found {len(e)}")
        if e != sorted(e):
            raise FormatError(f"line {ln}: vertex ids must be sorted ascending")
        edges.append(e)
    try:
        return from_edges(n, edges)
    except InvalidHypergraph as exc:
        raise FormatError(f"record at line {lineno}: {exc}") from None


def iter_loads(text: str) -> Iterator[Hypergraph]:
    if text and not text.endswith("\n"):
        raise FormatError("missing trailing newline")
    record: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.split("\n")[:-1], start=1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        if not line:
            if record:
                yield _parse_record(record)
                record = []
            continue
        record.append((lineno, line))
    if record:
        yield _parse_record(record)


def loads(text: str) -> Hypergraph:
    records = list(iter_loads(text))
    if len(records) != 1:
        raise FormatError(f"expected exactly one hypergraph record, found {len(records)}")
    return records[0]


def to_json_obj(h: Hypergraph) -> dict:
    return {"k": uniformity(h) or 0, "n": h.n, "edges": [list(e) for e in h.edges]}


def from_json_obj(obj: dict) -> Hypergraph:
    try:
        k, n, edges = int(obj["k"]), int(obj["n"]), obj["edges"]
    except (KeyError, TypeError, ValueError):
        raise FormatError("JSON hypergraph needs integer 'k', 'n' and an 'edges' list") from None
    if k and any(len(e) != k for e in edges):
        raise FormatError(f"JSON hypergraph declares k={k} but has an edge of another size")
    try:
        return from_edges(n, edges)
    except (InvalidHypergraph, TypeError) as exc:
        raise FormatError(str(exc)) from None


def read(path: Union[str, Path]) -> Hypergraph:
    """Read a hypergraph from ``path``; ``.json`` files use the structured form."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
    if path.suffix == ".json" or text.lstrip().startswith("{"):
        try:
            return from_json_obj(json.loads(text))
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: invalid JSON ({exc.msg})") from None
    return loads(text)


def write(h: Hypergraph, path: Union[str, Path]) -> None:
    path = Path(path)
    if path.suffix == ".json":
        path.write_text(json.dumps(to_json_obj(h)) + "\n")
    else:
        path.write_text(dumps(h))
