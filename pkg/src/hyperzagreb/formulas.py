"""Exact closed-form Zagreb values for the extremal bicyclic witnesses.

Every evaluator works in :class:`fractions.Fraction` and is written twice:
once as the expanded polynomial in ``k, m, g`` and once as the degree-sum
expression it comes from.  The two are cross-checked on every call.
Parameter ranges mirror the hypotheses of the corresponding extremal
statements; pass ``unchecked=True`` to evaluate outside them.
"""

from __future__ import annotations

from fractions import Fraction as F
from typing import Optional, Union

from .errors import NotInteger, NotUniform, ParameterOutOfRange
from .hypergraph import Hypergraph, degree_stats, uniformity, zagreb_index

Exact = Union[int, F]


def _exact(x: F) -> Exact:
    return x.numerator if x.denominator == 1 else x


def _agree(expanded: F, summed: F, name: str) -> Exact:
    if expanded != summed:
        raise AssertionError(f"{name}: expanded {expanded} != degree-sum {summed}")
    return _exact(expanded)


def as_int(value: Exact) -> int:
    """Assert integrality of an exact value."""
    value = F(value)
    if value.denominator != 1:
        raise NotInteger(f"{value} is not an integer")
    return value.numerator


def format_exact(value: Exact) -> str:
    value = F(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def _require(cond: bool, unchecked: bool, msg: str) -> None:
    if not cond and not unchecked:
        raise ParameterOutOfRange(msg)


def min_zagreb_formula(n: int, m: int, k: int) -> int:
    return 3 * k * m - 2 * n


def b_max_formula(k: int, m: int, g: int, unchecked: bool = False) -> Exact:
    """Zagreb index of ``B_1(g, 0, g)`` with ``m - 2g`` pendant edges."""
    _require(3 <= g and 2 * g <= m, unchecked, f"b_max needs 3 <= g <= m/2 (g={g}, m={m})")
    k, m, g = F(k), F(m), F(g)
    expanded = -10 * g + m * k + 7 * m + 8 + m**2 + 4 * g**2 - 4 * m * g
    summed = 2 * g * (k - 2) + (m - 2 * g) * (k - 1) + 8 * (g - 1) + (m - 2 * g + 4) ** 2
    return _agree(expanded, summed, "b_max")


def c1_even_formula(k: int, m: int, g: int, unchecked: bool = False) -> Exact:
    """Zagreb index of ``C_1(g/2, g/2, g/2)`` with ``m - 3g/2`` pendants."""
    _require(g >= 4 and g % 2 == 0 and 2 * m >= 3 * g, unchecked,
             f"c1_even needs even g >= 4 and m >= 3g/2 (g={g}, m={m})")
    k, m, g = F(k), F(m), F(g)
    expanded = -F(9, 2) * g + m * k + 5 * m + 6 + m**2 + F(9, 4) * g**2 - 3 * m * g
    summed = (F(3, 2) * g * (k - 2) + (m - F(3, 2) * g) * (k - 1) + 12 * (g / 2 - 1) + 9
              + (3 + m - F(3, 2) * g) ** 2)
    value = _agree(expanded, summed, "c1_even")
    return value if unchecked else as_int(value)


def c2_odd_formula(k: int, m: int, g: int, unchecked: bool = False) -> Exact:
    """Zagreb index of ``C_2(floor(g/2), ceil(g/2), floor(g/2))`` with its pendants."""
    _require(g >= 3 and g % 2 == 1 and 2 * m >= 3 * g - 1, unchecked,
             f"c2_odd needs odd g >= 3 and m >= (3g-1)/2 (g={g}, m={m})")
    k, m, g = F(k), F(m), F(g)
    expanded = -6 * g + F(23, 4) + m * k + 6 * m + m**2 + F(9, 4) * g**2 - 3 * m * g
    half = (g - 1) / 2
    summed = ((g + half - 1) * (k - 2) + (k - 3) + (m - g - half) * (k - 1)
              + 4 * (g + half - 1) + (3 + m - g - half) ** 2)
    value = _agree(expanded, summed, "c2_odd")
    return value if unchecked else as_int(value)


def c1_odd_formula(k: int, m: int, g: int, unchecked: bool = False) -> Exact:
    """Zagreb index of ``C_1(floor(g/2), ceil(g/2), ceil(g/2))`` with its pendants."""
    _require(g >= 3 and g % 2 == 1 and 2 * m >= 3 * g + 1, unchecked,
             f"c1_odd needs odd g >= 3 and m >= g + (g+1)/2 (g={g}, m={m})")
    k, m, g = F(k), F(m), F(g)
    expanded = -3 * g + F(19, 4) + m * k + 4 * m + m**2 + F(9, 4) * g**2 - 3 * m * g
    half = (g + 1) / 2
    summed = ((g + half) * (k - 2) + (m - g - half) * (k - 1) + 4 * (g + half - 3) + 9
              + (3 + m - g - half) ** 2)
    value = _agree(expanded, summed, "c1_odd")
    return value if unchecked else as_int(value)


def c3_pendant_formula(k: int, m: int, p: int, q: int, l: int, unchecked: bool = False) -> Exact:
    """C_3 base with ``m - p - q - l`` pendants hung at one degree-2 vertex (q >= 2)."""
    legal = (q > 2 and 1 <= p <= q - 2 <= l) or (q == 2 and 1 <= p <= l)
    _require(legal and m >= p + q + l, unchecked,
             f"c3_pendant needs legal C3 parameters with q >= 2 and m >= p+q+l (p={p}, q={q}, l={l}, m={m})")
    k, m, p, q, l = (F(x) for x in (k, m, p, q, l))
    expanded = (-p - q + 2 - l + m * k + 3 * m + m**2 + p**2 + q**2 + l**2
                - 2 * m * p - 2 * m * q - 2 * m * l + 2 * p * q + 2 * p * l + 2 * q * l)
    s = p + q + l
    t = m - s
    # s(k-2)-2 cored base vertices, s degree-2 vertices besides the hub, t(k-1) pendant vertices
    summed = (s * (k - 2) - 2) + 4 * s + t * (k - 1) + (2 + t) ** 2
    return _agree(expanded, summed, "c3_pendant")


def move_delta_formula(t: int, du: int, dv: int) -> int:
    """Zagreb change when ``t`` edges move from a vertex of degree ``du`` to one of degree ``dv``."""
    if t < 1:
        raise ParameterOutOfRange("t must be >= 1")
    summed = (dv + t) ** 2 + (du - t) ** 2 - dv**2 - du**2
    expanded = 2 * t * (t + dv - du)
    if summed != expanded:
        raise AssertionError("move delta forms disagree")
    return expanded


def c1_step_delta(m: int, g: int, p: int) -> int:
    """Gain from rebalancing ``C_1(p, g-p, g-p)`` to ``C_1(p+1, g-p-1, g-p-1)`` (hub degree +1)."""
    summed = (m - 2 * g + p + 4) ** 2 + 1 - (m - 2 * g + p + 3) ** 2 - 4
    expanded = 2 * (m - 2 * g + p) + 4
    if summed != expanded:
        raise AssertionError("step delta forms disagree")
    return expanded


def theta_minus_dumbbell(k: int, m: int, g: int, unchecked: bool = False) -> tuple[Optional[Exact], Optional[Exact]]:
    """Girth-``g`` theta maximum minus dumbbell maximum.

    Returns ``(even, odd)``: the first entry is set for even ``g`` (C_1 witness),
    the second for odd ``g`` (C_2 witness); the other entry is ``None``.
    """
    _require(3 <= g and 2 * g <= m, unchecked, f"needs 3 <= g <= m/2 (g={g}, m={m})")
    kk, mm, gg = F(k), F(m), F(g)
    b = F(b_max_formula(k, m, g, unchecked=True))
    if g % 2 == 0:
        closed = F(11, 2) * gg - 2 * mm - 2 - F(7, 4) * gg**2 + mm * gg
        direct = F(c1_even_formula(k, m, g, unchecked=True)) - b
        return _agree(closed, direct, "c1_even - b_max"), None
    closed = 4 * gg - mm - F(9, 4) - F(7, 4) * gg**2 + mm * gg
    direct = F(c2_odd_formula(k, m, g, unchecked=True)) - b
    return None, _agree(closed, direct, "c2_odd - b_max")


def degree_identity_rhs(h: Hypergraph) -> int:
    """``sum_t (t-1)(t-2) n_t + 3km - 2n`` for a k-uniform ``h``."""
    k = uniformity(h)
    if k is None:
        raise NotUniform("degree identity needs a k-uniform hypergraph")
    hist = degree_stats(h).histogram
    return sum((t - 1) * (t - 2) * c for t, c in hist.items()) + 3 * k * h.m - 2 * h.n


def degree_identity_check(h: Hypergraph) -> bool:
    return zagreb_index(h) == degree_identity_rhs(h)


FORMULAS = {
    "min_zagreb": min_zagreb_formula,
    "b_max": b_max_formula,
    "c1_even": c1_even_formula,
    "c2_odd": c2_odd_formula,
    "c1_odd": c1_odd_formula,
    "c3_pendant": c3_pendant_formula,
    "move_delta": move_delta_formula,
    "theta_gap": theta_minus_dumbbell,
}
