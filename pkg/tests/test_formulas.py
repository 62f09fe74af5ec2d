from fractions import Fraction

import pytest

from hyperzagreb import formulas as fm
from hyperzagreb.constructors import extremal_b, extremal_c, hypercycle, FamilySpec, b_base, c_base
from hyperzagreb.errors import NotInteger, NotUniform, ParameterOutOfRange
from hyperzagreb.hypergraph import from_edges, zagreb_index


def test_min_zagreb():
    assert fm.min_zagreb_formula(7, 4, 3) == 22
    assert fm.min_zagreb_formula(11, 6, 3) == 32
    assert fm.min_zagreb_formula(199, 100, 3) == 502


def test_b_max():
    assert fm.b_max_formula(3, 6, 3) == 38
    assert fm.b_max_formula(3, 8, 3) == 62 == zagreb_index(extremal_b(3, 8, 3))
    assert fm.b_max_formula(3, 8, 4) == 48 == zagreb_index(extremal_b(3, 8, 4))
    assert fm.b_max_formula(3, 7, 3) == 49
    with pytest.raises(ParameterOutOfRange):
        fm.b_max_formula(3, 5, 3)


def test_c1_even():
    assert fm.c1_even_formula(3, 6, 4) == 36
    assert fm.c1_even_formula(3, 9, 4) == 69 == zagreb_index(extremal_c(3, 9, 4))
    # m = 3g/2 boundary: C1(3,3,3) with no pendants
    assert fm.c1_even_formula(3, 9, 6) == 51 == zagreb_index(c_base(FamilySpec("C", 1, 3, 3, 3), 3))
    with pytest.raises(ParameterOutOfRange):
        fm.c1_even_formula(3, 6, 6)


def test_c2_odd():
    assert fm.c2_odd_formula(3, 4, 3) == 24
    assert fm.c2_odd_formula(3, 6, 3) == 44
    assert fm.c2_odd_formula(4, 6, 3) == 50


def test_c1_odd():
    assert fm.c1_odd_formula(3, 5, 3) == 31
    assert fm.c1_odd_formula(3, 7, 3) == 51
    assert fm.c1_odd_formula(3, 6, 3) - fm.c2_odd_formula(3, 6, 3) == 3 * 3 - 1 - 12 == -4


def test_c3_pendant():
    assert fm.c3_pendant_formula(3, 4, 1, 2, 1) == 22
    assert fm.c3_pendant_formula(3, 5, 1, 2, 1) == 29
    assert fm.c3_pendant_formula(3, 7, 1, 3, 1) == 43
    with pytest.raises(ParameterOutOfRange):
        fm.c3_pendant_formula(3, 7, 2, 1, 2)


def test_off_parity_is_exact_fraction():
    v = fm.c1_even_formula(3, 6, 5, unchecked=True)
    assert isinstance(v, Fraction) and fm.format_exact(v) == "135/4"
    assert fm.format_exact(fm.c2_odd_formula(3, 6, 4, unchecked=True)) == "143/4"
    with pytest.raises(NotInteger):
        fm.as_int(v)
    with pytest.raises(ParameterOutOfRange):
        fm.c2_odd_formula(3, 6, 4)


def test_move_delta():
    assert fm.move_delta_formula(1, 2, 2) == 2
    assert fm.move_delta_formula(1, 2, 1) == 0
    assert fm.move_delta_formula(2, 3, 1) == 0
    with pytest.raises(ParameterOutOfRange):
        fm.move_delta_formula(0, 1, 1)


def test_c1_step_delta():
    assert fm.c1_step_delta(10, 4, 1) == 2 * (10 - 8 + 1) + 4


def test_theta_minus_dumbbell():
    even, odd = fm.theta_minus_dumbbell(3, 10, 4)
    assert odd is None
    assert even == fm.c1_even_formula(3, 10, 4) - fm.b_max_formula(3, 10, 4)
    even, odd = fm.theta_minus_dumbbell(3, 10, 5)
    assert even is None
    assert odd == fm.c2_odd_formula(3, 10, 5) - fm.b_max_formula(3, 10, 5)


def test_degree_identity():
    for h in (hypercycle(3, 4), b_base(FamilySpec("B", 2, 3, 4, 1), 4), extremal_c(5, 9, 3)):
        assert fm.degree_identity_check(h)
    with pytest.raises(NotUniform):
        fm.degree_identity_rhs(from_edges(3, [[0, 1], [0, 1, 2]]))
