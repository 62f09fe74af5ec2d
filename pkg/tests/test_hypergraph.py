import pytest

from hyperzagreb.constructors import FamilySpec, b_base, c_base, extremal_b, hypercycle, hyperpath
from hyperzagreb.errors import (
    DuplicateEdge,
    DuplicateVertexInEdge,
    EdgeTooSmall,
    NotConnected,
    NotLinear,
    NotUniform,
    VertexOutOfRange,
)
from hyperzagreb.hypergraph import (
    BICYCLIC,
    HYPERTREE,
    UNICYCLIC,
    Hypergraph,
    StructureClass,
    cored_vertices,
    degree,
    degree_stats,
    from_edges,
    girth,
    is_connected,
    is_linear,
    pendant_edges,
    structure_class,
    uniformity,
    zagreb_index,
)
from oracles import brute_girth


def test_from_edges_valid():
    h = from_edges(3, [[0, 1, 2]])
    assert h.m == 1 and h.n == 3
    h = from_edges(7, [[0, 1, 2], [0, 3, 4], [2, 3, 5], [4, 5, 6]])
    assert (h.n, h.m) == (7, 4)


def test_from_edges_sorts_and_normalizes():
    h = from_edges(4, [[3, 1, 2], [0, 1]])
    assert h.edges == ((0, 1), (1, 2, 3))


@pytest.mark.parametrize("n,edges,exc", [
    (3, [[0, 1, 3]], VertexOutOfRange),
    (3, [[0, 1, -1]], VertexOutOfRange),
    (3, [[0, 0, 1]], DuplicateVertexInEdge),
    (3, [[0, 1, 2], [2, 1, 0]], DuplicateEdge),
    (3, [[0]], EdgeTooSmall),
])
def test_from_edges_rejects(n, edges, exc):
    with pytest.raises(exc):
        from_edges(n, edges)


def test_invalid_errors_are_value_errors():
    with pytest.raises(ValueError):
        from_edges(2, [[0, 5]])


def test_degree():
    assert degree(hypercycle(3, 3), 0) == 2
    assert degree(from_edges(3, [[0, 1, 2]]), 0) == 1
    assert degree(from_edges(4, [[0, 1, 2]]), 3) == 0
    with pytest.raises(VertexOutOfRange):
        degree(hypercycle(3, 3), 6)


def test_degree_stats():
    st = degree_stats(hypercycle(3, 3))
    assert st.histogram == {1: 3, 2: 3} and st.max_degree == 2
    st = degree_stats(extremal_b(3, 6, 3))
    assert st.histogram == {1: 6, 2: 4, 4: 1} and st.max_degree == 4
    st = degree_stats(Hypergraph(0))
    assert st.histogram == {} and st.max_degree == 0
    assert st.total_vertices == 0 and st.total_degree == 0


def test_zagreb_index():
    assert zagreb_index(from_edges(3, [[0, 1, 2]])) == 3
    assert zagreb_index(hypercycle(3, 3)) == 15
    assert zagreb_index(c_base(FamilySpec("C", 2, 1, 2, 1), 3)) == 24


def test_uniformity():
    assert uniformity(hyperpath(4, 2)) == 4
    assert uniformity(from_edges(3, [[0, 1], [0, 1, 2]])) is None
    assert uniformity(Hypergraph(3)) is None


def test_is_linear():
    assert is_linear(hypercycle(3, 4))
    assert not is_linear(from_edges(4, [[0, 1, 2], [0, 1, 3]]))
    assert is_linear(from_edges(3, [[0, 1, 2]]))


def test_is_connected():
    assert is_connected(hyperpath(3, 5))
    assert not is_connected(from_edges(6, [[0, 1, 2], [3, 4, 5]]))
    assert not is_connected(from_edges(5, [[0, 1, 2], [2, 3, 4]][:1] + [[1, 2, 3]]))


def test_structure_class():
    assert structure_class(hyperpath(3, 4)) == HYPERTREE
    assert structure_class(hypercycle(3, 3)) == UNICYCLIC
    h = c_base(FamilySpec("C", 1, 2, 2, 2), 3)
    assert h.n == 11 and structure_class(h) == BICYCLIC
    assert BICYCLIC.name == "bicyclic"
    assert StructureClass.parse("Unicyclic") == UNICYCLIC


def test_structure_class_errors():
    with pytest.raises(NotUniform):
        structure_class(from_edges(3, [[0, 1, 2], [0, 2]]))
    with pytest.raises(NotLinear):
        structure_class(from_edges(4, [[0, 1, 2], [0, 1, 3]]))
    with pytest.raises(NotConnected):
        structure_class(from_edges(6, [[0, 1, 2], [3, 4, 5]]))


def test_girth():
    assert girth(hypercycle(3, 5)) == 5
    assert girth(hyperpath(3, 4)) is None
    assert girth(b_base(FamilySpec("B", 1, 3, 4, 2), 3)) == 3
    assert girth(c_base(FamilySpec("C", 1, 2, 2, 2), 3)) == 4


def test_girth_matches_brute_force():
    samples = [
        hypercycle(3, 3), hypercycle(4, 4), hyperpath(3, 3),
        b_base(FamilySpec("B", 2, 3, 3, 1), 3),
        c_base(FamilySpec("C", 3, 1, 2, 1), 3),
        c_base(FamilySpec("C", 2, 1, 2, 2), 3),
        c_base(FamilySpec("C", 1, 1, 2, 3), 4),
    ]
    for h in samples:
        assert girth(h) == brute_girth(h)


def test_cored_and_pendant():
    single = from_edges(3, [[0, 1, 2]])
    assert cored_vertices(single) == {0, 1, 2}
    assert pendant_edges(single) == set()
    path = hyperpath(3, 3)
    ends = {i for i, e in enumerate(path.edges) if 0 in e or 3 in e}
    assert pendant_edges(path) == ends


def test_relabel():
    h = hypercycle(3, 3)
    perm = list(reversed(range(h.n)))
    r = h.relabel(perm)
    assert zagreb_index(r) == zagreb_index(h)
    with pytest.raises(ValueError):
        h.relabel([0, 0, 1, 2, 3, 4])
