import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hypcodes import poly
from hypcodes.codes import (
    GuardExceeded,
    NotACodeword,
    all_points,
    code_build,
    codewords_within,
    corrupt,
    encode,
    evaluate,
    format_poly,
    format_word,
    hamming,
    interpolate_exact,
    iter_codewords,
    min_weight_bruteforce,
    nearest_codeword,
    nearest_codeword_full,
    parse_word,
    random_message,
    schur,
    schur_power,
)
from hypcodes.field import gf
from hypcodes.lattice import ExponentSet, build_cube_set, build_hyp_set, build_rm_set
from hypcodes.linalg import rank

import oracles


def naive_monomial_value(F, e, x):
    val = 1
    for c, xi in zip(e, x):
        for _ in range(c):
            val = oracles.field_mul(val, int(xi), F.p, F.k, F.modulus)
    return val


@st.composite
def family_code(draw, max_q=9, max_n=81):
    q = draw(st.sampled_from([q for q in (2, 3, 4, 5, 7, 8, 9) if q <= max_q]))
    m = draw(st.sampled_from([m for m in (1, 2, 3) if q**m <= max_n]))
    fam = draw(st.sampled_from(["rm", "hyp", "cube"]))
    if fam == "rm":
        H = build_rm_set(q, m, draw(st.integers(0, m * (q - 1))))
    elif fam == "hyp":
        H = build_hyp_set(q, m, draw(st.integers(1, q**m)))
    else:
        H = build_cube_set(q, m, draw(st.integers(0, q - 1)))
    return code_build(gf(q), H)


def test_generator_examples():
    C = code_build(gf(3), build_rm_set(3, 1, 1))
    assert C.generator.tolist() == [[1, 1, 1], [0, 1, 2]]
    F2 = gf(2)
    assert evaluate(F2, {(1, 1): 1}, 2).tolist() == [0, 0, 0, 1]
    assert evaluate(gf(3), {(1,): 1}, 1).tolist() == [0, 1, 2]
    assert all_points(2, 2).tolist() == [[0, 0], [0, 1], [1, 0], [1, 1]]
    H = code_build(gf(4), build_hyp_set(4, 2, 9))
    assert H.generator.shape == (4, 16) and H.k == 4


@given(family_code(max_n=64))
def test_generator_matches_naive_evaluation(C):
    F = C.field
    for row, e in zip(C.generator, C.exponents.sorted):
        assert row.tolist() == [naive_monomial_value(F, e, x) for x in C.points]


@given(family_code())
def test_monomials_are_independent(C):
    assert rank(C.field, C.generator) == C.k == len(C.exponents)


@given(family_code(), st.integers(0, 2**32))
def test_encode_interpolate_round_trip(C, seed):
    msg = random_message(C, np.random.default_rng(seed))
    word = encode(C, msg)
    assert C.contains(word)
    assert interpolate_exact(C, word) == msg


@given(family_code(), st.integers(0, 2**32))
def test_interpolate_rejects_non_codewords(C, seed):
    if C.k == C.n:
        return
    word = encode(C, random_message(C, np.random.default_rng(seed)))
    # a nonzero word of the dual-complement direction: add a unit vector and
    # check against the parity checks as the oracle
    bad = word.copy()
    bad[seed % C.n] = C.field.add(bad[seed % C.n], 1)
    syn = C.field.dot(C.parity_check, bad)
    if syn.any():
        with pytest.raises(NotACodeword):
            interpolate_exact(C, bad)


@given(family_code(max_n=64), st.integers(0, 2**32))
def test_schur_is_evaluation_of_product(C, seed):
    F, m = C.field, C.m
    rng = np.random.default_rng(seed)
    f, g = random_message(C, rng), random_message(C, rng)
    fg = poly.reduce(F, poly.mul(F, f, g))
    assert np.array_equal(schur(F, encode(C, f), encode(C, g)), evaluate(F, fg, m))
    assert np.array_equal(schur_power(F, encode(C, f), 3), evaluate(F, poly.power(F, f, 3, m), m))


@pytest.mark.parametrize(
    "q,m,H,delta",
    [
        (3, 1, build_rm_set(3, 1, 1), 2),
        (4, 2, build_hyp_set(4, 2, 9), 9),
        (3, 2, build_cube_set(3, 2, 1), 4),
        (5, 2, build_hyp_set(5, 2, 13), 15),
    ],
)
def test_min_weight_examples(q, m, H, delta):
    assert min_weight_bruteforce(code_build(gf(q), H)) == delta


@given(family_code(max_n=27))
def test_min_weight_against_full_enumeration(C):
    if C.q**C.k > 4096:
        return
    F = C.field
    best = C.n + 1
    for msg in itertools.product(range(C.q), repeat=C.k):
        if any(msg):
            best = min(best, int(np.count_nonzero(C.encode_vector(np.array(msg)))))
    assert min_weight_bruteforce(C) == best


def test_cube_is_tensor_of_rs():
    F = gf(5)
    rs = code_build(F, build_rm_set(5, 1, 2))
    cube = code_build(F, build_cube_set(5, 2, 2))
    assert np.array_equal(cube.generator, F.mul(np.kron(rs.generator, np.ones_like(rs.generator)),
                                               np.kron(np.ones_like(rs.generator), rs.generator)))


def test_iter_codewords_is_lex_ordered():
    C = code_build(gf(3), build_rm_set(3, 2, 1))
    seen = np.concatenate([w for _, w in iter_codewords(C, block=9)])
    expect = [C.encode_vector(np.array(m)) for m in itertools.product(range(3), repeat=C.k)]
    assert np.array_equal(seen, np.array(expect))


@given(st.integers(0, 2**32))
def test_nearest_codeword_ties_go_to_smallest_message(seed):
    C = code_build(gf(3), build_rm_set(3, 2, 1))
    y = np.random.default_rng(seed).integers(0, 3, C.n)
    msg, word, dist = nearest_codeword_full(C, y)
    close = codewords_within(C, y, C.n)
    best = min(d for _, _, d in close)
    first = min(tuple(m) for m, _, d in close if d == best)
    assert dist == best and tuple(msg) == first
    assert np.array_equal(word, C.encode_vector(msg))


@pytest.mark.parametrize("seed", range(200))
def test_nearest_corrects_below_half_distance(seed):
    C = code_build(gf(4), build_hyp_set(4, 2, 9))
    c = encode(C, random_message(C, np.random.default_rng(seed)))
    y, _ = corrupt(c, 4, seed, 4)
    word, dist = nearest_codeword(C, y)
    assert np.array_equal(word, c) and dist == 4


@given(st.integers(0, 16), st.integers(0, 2**32), st.sampled_from([2, 3, 5, 16]))
def test_corrupt(t, seed, q):
    y = np.random.default_rng(seed).integers(0, q, 16)
    z, pos = corrupt(y, t, seed, q)
    assert hamming(y, z) == t and np.flatnonzero(y != z).tolist() == pos.tolist()
    assert z.min() >= 0 and z.max() < q
    z2, _ = corrupt(y, t, seed, q)
    assert np.array_equal(z, z2)


def test_guard():
    C = code_build(gf(16), build_hyp_set(16, 2, 81))
    with pytest.raises(GuardExceeded):
        min_weight_bruteforce(C)


def test_empty_code():
    C = code_build(gf(3), ExponentSet(3, 2, frozenset()))
    assert C.k == 0 and min_weight_bruteforce(C) == C.n + 1
    assert interpolate_exact(C, np.zeros(9, dtype=np.int64)) == {}


def test_text_formats():
    w = np.array([0, 3, 1])
    assert np.array_equal(parse_word(format_word(w)), w)
    assert format_poly({}) == "0"
    assert format_poly({(1, 0): 2, (0, 0): 1}) == "0,0:1 1,0:2"
