import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hypcodes.lattice import (
    ExponentSet,
    build_cube_set,
    build_hyp_set,
    build_rm_set,
    containment_report,
    cube_hyp_bounds,
    l_set,
    l_set_closed_form_m2,
    largest_rm_inside_hyp,
    minkowski_power,
    parse_exponent_set,
    reduced_power,
    shortcut_parameters_m2,
    rm_is_hyperbolic,
    rm_min_distance,
    smallest_rm_containing_hyp,
    sum_code_distance_bound,
    sumset,
)

import oracles

qm = st.sampled_from([(2, 1), (3, 1), (5, 1), (2, 2), (3, 2), (4, 2), (5, 2), (7, 2), (8, 2), (9, 2), (3, 3), (4, 3)])


@st.composite
def hyp_params(draw):
    q, m = draw(qm)
    return q, m, draw(st.integers(1, q**m))


@given(hyp_params())
def test_family_sets_match_definitions(params):
    q, m, d = params
    assert build_hyp_set(q, m, d).members == oracles.hyp(q, m, d)
    s = d % (m * (q - 1) + 1)
    assert build_rm_set(q, m, s).members == oracles.rm(q, m, s)
    assert build_cube_set(q, m, s % q).members == oracles.cube(q, m, s % q)


@given(hyp_params())
def test_rm_brackets_are_tight(params):
    q, m, d = params
    H = oracles.hyp(q, m, d)
    lo = largest_rm_inside_hyp(q, m, d)
    hi = smallest_rm_containing_hyp(q, m, d)
    assert oracles.rm(q, m, lo) <= H
    assert lo == m * (q - 1) or not oracles.rm(q, m, lo + 1) <= H
    assert H <= oracles.rm(q, m, hi)
    assert hi == 0 or not H <= oracles.rm(q, m, hi - 1)


@given(hyp_params())
def test_cube_brackets_are_tight(params):
    q, m, d = params
    H = oracles.hyp(q, m, d)
    inside, outside = cube_hyp_bounds(q, m, d)
    assert oracles.cube(q, m, inside) <= H
    assert inside == q - 1 or not oracles.cube(q, m, inside + 1) <= H
    assert H <= oracles.cube(q, m, outside)
    assert outside == 0 or not H <= oracles.cube(q, m, outside - 1)


def test_bracket_examples():
    # values re-derived by the set-wise oracle above
    assert (largest_rm_inside_hyp(9, 2, 27), smallest_rm_containing_hyp(9, 2, 27)) == (6, 7)
    assert (largest_rm_inside_hyp(9, 2, 9), smallest_rm_containing_hyp(9, 2, 9)) == (8, 12)
    assert smallest_rm_containing_hyp(27, 3, 37) == 70
    rep = containment_report(32, 2, 225)
    assert (rep.s_largest_rm, rep.s_smallest_rm, rep.s_largest_cube, rep.s_smallest_cube) == (24, 34, 17, 24)
    assert cube_hyp_bounds(16, 2, 81) == (7, 10)


@given(qm, st.data())
def test_rm_min_distance_is_min_footprint(qm_, data):
    q, m = qm_
    s = data.draw(st.integers(0, m * (q - 1)))
    assert rm_min_distance(q, m, s) == min(oracles.footprint(e, q) for e in oracles.rm(q, m, s))


@given(qm, st.data())
def test_rm_is_hyperbolic_matches_sets(qm_, data):
    q, m = qm_
    s = data.draw(st.integers(0, m * (q - 1) - 1))
    ans, delta = rm_is_hyperbolic(q, m, s)
    assert ans == (oracles.rm(q, m, s) == oracles.hyp(q, m, delta))


def test_hyperbolic_degrees_q9():
    assert [s for s in range(16) if rm_is_hyperbolic(9, 2, s)[0]] == [0, 1, 2, 3, 4, 14, 15]


def test_family_sizes():
    assert len(build_hyp_set(9, 2, 27)) == 32
    assert len(build_hyp_set(32, 2, 225)) == 482
    assert len(build_rm_set(32, 2, 24)) == 325
    assert len(build_cube_set(32, 2, 24)) == 625
    assert len(build_hyp_set(4, 2, 9)) == 4


@given(hyp_params(), st.integers(1, 3), st.sampled_from(["strict", "reduced"]))
def test_l_set_matches_definition(params, i, mode):
    q, m, d = params
    if q**m > 64:
        return
    for r in (1, max(1, d // 3), max(1, q**m // 4)):
        assert l_set(q, m, d, r, i, mode).members == oracles.l_set_definition(q, m, d, r, i, mode)


@given(hyp_params(), st.integers(1, 40))
def test_l_sets_nested(params, r):
    q, m, d = params
    r = min(r, q**m - 1)
    if r < 1:
        return
    for mode in ("strict", "reduced"):
        prev = l_set(q, m, d, r, 0, mode)
        for i in range(1, 4):
            cur = l_set(q, m, d, r, i, mode)
            assert cur <= prev
            prev = cur
        assert l_set(q, m, d, r, 2, "strict") <= l_set(q, m, d, r, 2, "reduced")


@given(hyp_params())
def test_first_level_by_hand(params):
    # first level written out by hand: a + h stays in the box and in H_r for all h in H
    q, m, d = params
    r = max(1, (d - 1) // 2)
    if r >= q**m:
        return
    L1 = l_set(q, m, d, r, 1)
    H = oracles.hyp(q, m, d)
    expect = {a for a in oracles.box(q, m) if all(
        all(x + y <= q - 1 for x, y in zip(a, h)) and oracles.footprint(tuple(x + y for x, y in zip(a, h)), q) >= r + 1
        for h in H)}
    assert L1.members == expect


@pytest.mark.parametrize("q,d", [(16, 81), (9, 27), (11, 32), (13, 50), (25, 150)])
def test_closed_form_m2_matches_l_set(q, d):
    a, b = shortcut_parameters_m2(q, d)
    for r in range(1, math.ceil(a - b + 1)):
        for i in range(1, 4):
            assert l_set_closed_form_m2(q, d, r, i) == l_set(q, 2, d, r, i), (r, i)


def test_closed_form_example_q16():
    a, b = shortcut_parameters_m2(16, 81)
    assert a == 10 and b == Fraction(5, 2)
    assert l_set(16, 2, 81, 8, 0) == build_hyp_set(16, 2, 9)
    assert l_set(16, 2, 81, 8, 1).members == build_cube_set(16, 2, 5).members
    assert len(l_set(16, 2, 81, 8, 2)) == 0


@given(hyp_params(), st.integers(0, 3))
def test_minkowski_and_reduced_powers(params, i):
    q, m, d = params
    if q**m > 64:
        return
    H = build_hyp_set(q, m, d)
    assert minkowski_power(H, i) == frozenset(oracles.sums(oracles.hyp(q, m, d), i, m))
    assert reduced_power(H, i) == frozenset(oracles.reduce_exp(v, q) for v in oracles.sums(H.members, i, m))


@given(hyp_params(), hyp_params())
def test_sum_code_distance_bound(p1, p2):
    q, m, d1 = p1
    if p2[:2] != (q, m):
        return
    d2 = p2[2]
    A, B = build_hyp_set(q, m, d1), build_hyp_set(q, m, d2)
    S = ExponentSet(q, m, sumset(A, B))
    assert S.footprint_bound() >= sum_code_distance_bound(q, m, d1, d2)


@given(hyp_params())
def test_serialize_round_trip(params):
    H = build_hyp_set(*params)
    back = parse_exponent_set(H.serialize())
    assert back == H and back.tag == H.tag


def test_rejects_out_of_range():
    assert len(build_hyp_set(4, 2, 17)) == 0
    with pytest.raises(ValueError):
        largest_rm_inside_hyp(4, 2, 17)
    with pytest.raises(ValueError):
        ExponentSet(3, 2, frozenset([(3, 0)]))
    with pytest.raises(ValueError):
        rm_min_distance(3, 2, 5)


def test_set_operation_examples():
    from hypcodes.lattice import reduce_exponent

    assert reduce_exponent((0, 3), 4) == (0, 3)
    assert reduce_exponent((4, 0), 4) == (1, 0)
    assert reduce_exponent((7, 5), 4) == (1, 2)
    H = build_cube_set(4, 2, 1)
    assert minkowski_power(H, 0) == {(0, 0)}
    assert minkowski_power(H, 1) == H.members
    assert minkowski_power(H, 2) == build_cube_set(4, 2, 2).members
    assert sum_code_distance_bound(4, 2, 12, 12) == 8
    assert sum_code_distance_bound(4, 2, 16, 16) == 16
    assert sum_code_distance_bound(4, 2, 8, 8) == 1
    S = ExponentSet(4, 2, sumset(build_hyp_set(4, 2, 12), build_hyp_set(4, 2, 12)))
    assert S.footprint_bound() >= 8
    assert cube_hyp_bounds(5, 2, 1) == (4, 4)
    assert len(l_set_closed_form_m2(16, 81, 8, 1)) == 36
    assert len(l_set_closed_form_m2(16, 81, 8, 2)) == 0


def test_closed_form_single_point_and_refusals():
    # q - 1 - 2a = 0 for q=9, d=37 (a = 4)
    a, b = shortcut_parameters_m2(9, 37)
    assert a == 4 and a - b + 1 > 1
    assert l_set_closed_form_m2(9, 37, 1, 2).members == {(0, 0)}
    with pytest.raises(ValueError):
        l_set_closed_form_m2(16, 16, 1, 1)  # d <= q
    with pytest.raises(ValueError):
        l_set_closed_form_m2(16, 81, 9, 1)  # r beyond a - b + 1


@pytest.mark.parametrize("q", range(2, 17))
def test_max_product_at_sum_exhaustive(q):
    import itertools

    from hypcodes.lattice import max_product_at_sum

    for m in (1, 2, 3):
        best = {}
        for e in itertools.product(range(q), repeat=m):
            s = sum(e)
            best[s] = max(best.get(s, 0), oracles.footprint(e, q))
        for s, v in best.items():
            assert max_product_at_sum(q, m, s) == v


@pytest.mark.parametrize("q,m", [(q, m) for q in range(2, 12) for m in (1, 2, 3) if q**m <= 1331])
def test_hyp_not_inside_rm_below_m_floor_a(q, m):
    for d in range(1, q**m + 1):
        root = next(x for x in range(q + 1) if x**m >= d)  # ceil(d^(1/m))
        s = m * (q - root) - 1
        if s >= 0:
            assert not oracles.hyp(q, m, d) <= oracles.rm(q, m, s)
