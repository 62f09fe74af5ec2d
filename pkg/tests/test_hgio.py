import json

import pytest

from hyperzagreb import hgio
from hyperzagreb.canonical import canonical_code
from hyperzagreb.constructors import FamilySpec, c_base, hypercycle
from hyperzagreb.errors import FormatError
from hyperzagreb.hypergraph import from_edges


def test_dumps_format():
    h = hypercycle(3, 3)
    text = hgio.dumps(h)
    lines = text.splitlines()
    assert lines[0] == "3 6 3"
    assert len(lines) == 4 and text.endswith("\n")


def test_round_trip_text_and_json(tmp_path):
    h = c_base(FamilySpec("C", 2, 1, 2, 1), 3)
    assert hgio.loads(hgio.dumps(h)) == h
    p = tmp_path / "h.hg"
    hgio.write(h, p)
    assert canonical_code(hgio.read(p)) == canonical_code(h)
    j = tmp_path / "h.json"
    hgio.write(h, j)
    assert json.loads(j.read_text())["k"] == 3
    assert hgio.read(j) == h


def test_many_records():
    hs = [hypercycle(3, 3), hypercycle(3, 4)]
    assert list(hgio.iter_loads(hgio.dumps_many(hs))) == hs


def test_comments_and_mixed():
    text = "# a comment\n0 4 2\n0 1\n1 2 3\n"
    h = hgio.loads(text)
    assert h.edges == ((0, 1), (1, 2, 3))


@pytest.mark.parametrize("text", [
    "3 3 1\n0 1 2",          # no trailing newline
    "3 3 2\n0 1 2\n",        # wrong edge count
    "3 4 1\n0 1\n",          # wrong edge size
    "3 3 1\n2 1 0\n",        # unsorted ids
    "3 3 1\n0 1 3\n",        # id out of range
    "x y z\n",
    "",
])
def test_loads_rejects(text):
    with pytest.raises(FormatError):
        hgio.loads(text)


def test_read_missing(tmp_path):
    with pytest.raises(FormatError):
        hgio.read(tmp_path / "missing.hg")


def test_bad_json(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"k": 3, "n": 2, "edges": [[0, 1, 2]]}\n')
    with pytest.raises(FormatError):
        hgio.read(p)
    p.write_text("{not json\n")
    with pytest.raises(FormatError):
        hgio.read(p)


def test_nonuniform_header():
    h = from_edges(4, [[0, 1], [1, 2, 3]])
    assert hgio.dumps(h).startswith("0 4 2\n")
