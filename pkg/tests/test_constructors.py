import itertools
import warnings

import pytest

from hyperzagreb.canonical import canonical_code
from hyperzagreb.constructors import (
    FamilySpec,
    attach_pendant_edges,
    b_base,
    c1_odd_witness,
    c3_pendant_witness,
    c_base,
    extremal_b,
    extremal_c,
    family_member,
    global_max,
    hypercycle,
    hyperpath,
    min_bicyclic,
)
from hyperzagreb.errors import IllegalParameters, LengthTooSmall, OutOfTheoremRange
from hyperzagreb.hypergraph import (
    BICYCLIC,
    degree_stats,
    from_edges,
    girth,
    is_linear,
    structure_class,
    uniformity,
    zagreb_index,
)
from oracles import brute_girth, brute_isomorphic


def test_hyperpath():
    h = hyperpath(3, 0)
    assert (h.n, h.m) == (1, 0)
    h = hyperpath(3, 2)
    assert (h.n, h.m) == (5, 2) and degree_stats(h).histogram == {1: 4, 2: 1}
    h = hyperpath(4, 3)
    assert h.n == 10 and degree_stats(h).histogram == {1: 8, 2: 2} and zagreb_index(h) == 16


def test_hypercycle():
    assert hypercycle(3, 3).n == 6 and zagreb_index(hypercycle(3, 3)) == 15
    assert girth(hypercycle(3, 5)) == 5
    h = hypercycle(4, 3)
    assert h.n == 9 and degree_stats(h).histogram == {1: 6, 2: 3} and zagreb_index(h) == 18
    with pytest.raises(LengthTooSmall):
        hypercycle(3, 2)


@pytest.mark.parametrize("variant,p,q,l,n,hist,z", [
    (1, 3, 3, 0, 11, {1: 6, 2: 4, 4: 1}, 38),
    (3, 3, 3, 0, 11, {1: 4, 2: 7}, 32),
])
def test_b_base_examples(variant, p, q, l, n, hist, z):
    h = b_base(FamilySpec("B", variant, p, q, l), 3)
    assert h.n == n and degree_stats(h).histogram == hist and zagreb_index(h) == z


def test_b_base_girth():
    h = b_base(FamilySpec("B", 1, 3, 4, 2), 3)
    assert h.n == 17 and girth(h) == 3 == brute_girth(h)


@pytest.mark.parametrize("variant,pql,n,hist,z,g", [
    # the degree count of C2(1,2,1) gives three cored vertices
    (2, (1, 2, 1), 7, {1: 3, 2: 3, 3: 1}, 24, 3),
    (1, (2, 2, 2), 11, {1: 6, 2: 3, 3: 2}, 36, 4),
    (3, (1, 2, 1), 7, {1: 2, 2: 5}, 22, 3),
])
def test_c_base_examples(variant, pql, n, hist, z, g):
    h = c_base(FamilySpec("C", variant, *pql), 3)
    assert h.n == n
    assert degree_stats(h).histogram == hist
    assert zagreb_index(h) == z
    assert girth(h) == g == brute_girth(h)


def _legal_specs(k, total):
    for fam, variants in (("B", (1, 2, 3)), ("C", (1, 2, 3))):
        for v in variants:
            for p, q, l in itertools.product(range(0, total + 1), repeat=3):
                spec = FamilySpec(fam, v, p, q, l)
                if p + q + l <= total and spec.is_legal(k):
                    yield spec


@pytest.mark.parametrize("k", [3, 4])
def test_every_legal_base_is_linear_bicyclic(k):
    count = 0
    for spec in _legal_specs(k, 8):
        h = b_base(spec, k) if spec.family == "B" else c_base(spec, k)
        assert uniformity(h) == k and is_linear(h)
        assert structure_class(h) == BICYCLIC
        assert h.n == spec.core_vertices(k) and h.m == spec.core_edges
        count += 1
    assert count > 50


def test_illegal_specs_rejected():
    with pytest.raises(IllegalParameters):
        b_base(FamilySpec("B", 1, 2, 3, 0), 3)
    with pytest.raises(IllegalParameters):
        c_base(FamilySpec("C", 1, 3, 2, 2), 3)
    # C3 with q = 1 needs k > 3
    assert not FamilySpec("C", 3, 2, 1, 2).is_legal(3)
    assert FamilySpec("C", 3, 2, 1, 2).is_legal(4)
    c_base(FamilySpec("C", 3, 2, 1, 2), 4)


def test_b_attachment_choices_isomorphic():
    spec = FamilySpec("B", 1, 3, 3, 0)
    codes = {canonical_code(b_base(spec, 3, attach=(i, j))) for i in range(3) for j in range(3)}
    assert len(codes) == 1
    spec = FamilySpec("B", 2, 3, 4, 1)
    codes = {canonical_code(b_base(spec, 3, attach=(i, j))) for i in range(3) for j in range(4)}
    assert len(codes) == 1


def test_attach_pendant_edges():
    c = hypercycle(3, 3)
    h = attach_pendant_edges(c, 0, 1, 3)
    assert h.n == 8 and degree_stats(h).max_degree == 3 and zagreb_index(h) == 22
    assert attach_pendant_edges(c, 0, 0, 3) == c
    h = attach_pendant_edges(from_edges(3, [[0, 1, 2]]), 0, 2, 3)
    assert zagreb_index(h) == 15


def test_extremal_b():
    assert zagreb_index(extremal_b(3, 6, 3)) == 38
    h = extremal_b(3, 8, 3)
    assert h.n == 15 and degree_stats(h).histogram == {1: 10, 2: 4, 6: 1}
    # 10*1 + 4*4 + 36
    assert zagreb_index(h) == 62
    assert zagreb_index(extremal_b(3, 8, 4)) == 48
    with pytest.raises(IllegalParameters):
        extremal_b(3, 5, 3)


def test_extremal_c():
    assert zagreb_index(extremal_c(3, 6, 4)) == 36
    assert zagreb_index(extremal_c(3, 4, 3)) == 24
    h = extremal_c(3, 6, 3)
    assert degree_stats(h).histogram == {1: 7, 2: 3, 5: 1} and zagreb_index(h) == 44
    assert brute_isomorphic(h, family_member(FamilySpec("C", 2, 1, 2, 1, 2), 3))


def test_global_max():
    assert zagreb_index(global_max(3, 6)) == 44
    h = global_max(4, 6)
    assert h.n == 17 and zagreb_index(h) == 50
    with pytest.warns(OutOfTheoremRange):
        assert zagreb_index(global_max(3, 4)) == 24
    with pytest.raises(IllegalParameters):
        global_max(3, 3)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        global_max(3, 7)


def test_min_bicyclic():
    assert zagreb_index(min_bicyclic(3, 4)) == 22 == 3 * 3 * 4 - 2 * 7
    assert zagreb_index(min_bicyclic(3, 6)) == 32
    assert degree_stats(min_bicyclic(4, 9)).max_degree == 2
    with pytest.raises(IllegalParameters):
        min_bicyclic(3, 3)


def test_other_witnesses():
    assert zagreb_index(c1_odd_witness(3, 5, 3)) == 31
    assert zagreb_index(c1_odd_witness(3, 7, 3)) == 51
    assert zagreb_index(c3_pendant_witness(3, 4, 1, 2, 1)) == 22
    assert zagreb_index(c3_pendant_witness(3, 5, 1, 2, 1)) == 29
    assert zagreb_index(c3_pendant_witness(3, 7, 1, 3, 1)) == 43
