"""Monomial evaluation codes over GF(q).

Points of ``F_q^m`` are listed in lexicographic order of element indices
with the first coordinate most significant; generator rows follow the
lexicographic order of the exponent vectors.  Messages are sparse
polynomials, ``dict[exponent tuple, nonzero element]``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from . import linalg
from .field import FieldSpec
from .lattice import ExponentSet, reduce_exponent

BRUTE_FORCE_LIMIT = 2**22

SparsePolynomial = dict


class NotACodeword(ValueError):
    pass


class GuardExceeded(ValueError):
    """A brute-force routine would enumerate more than its limit."""


def all_points(q: int, m: int) -> np.ndarray:
    return np.array(list(itertools.product(range(q), repeat=m)), dtype=np.int64).reshape(q**m, m)


def monomial_rows(F: FieldSpec, exponents, points: np.ndarray) -> np.ndarray:
    """Evaluations of the monomials ``X^e`` (reduced exponents) at ``points``."""
    exps = np.asarray(exponents, dtype=np.int64).reshape(-1, points.shape[1])
    rows = np.ones((len(exps), len(points)), dtype=np.int64)
    table = F.power_table
    for j in range(points.shape[1]):
        rows = F.mul(rows, table[points[None, :, j], exps[:, j, None]])
    return rows


def evaluate(F: FieldSpec, poly: dict, m: int) -> np.ndarray:
    """``ev(poly)`` on all ``q^m`` points; exponents are reduced first."""
    q = F.q
    word = np.zeros(q**m, dtype=np.int64)
    if not poly:
        return word
    red: dict = {}
    for e, c in poly.items():
        e = reduce_exponent(e, q)
        red[e] = F.add(red.get(e, 0), c)
    exps = [e for e, c in red.items() if c]
    if not exps:
        return word
    coeffs = np.array([red[e] for e in exps], dtype=np.int64)
    return F.dot(coeffs, monomial_rows(F, exps, all_points(q, m)))


@dataclass(frozen=True, eq=False)
class EvaluationCode:
    field: FieldSpec
    exponents: ExponentSet

    def __post_init__(self):
        if self.exponents.q != self.field.q:
            raise ValueError(f"exponent set over q={self.exponents.q}, field has q={self.field.q}")

    def __repr__(self):
        return f"EvaluationCode({self.exponents.tag}, q={self.q}, m={self.m}, k={self.k})"

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def m(self) -> int:
        return self.exponents.m

    @property
    def n(self) -> int:
        return self.q**self.m

    @property
    def k(self) -> int:
        return len(self.exponents)

    @cached_property
    def points(self) -> np.ndarray:
        return all_points(self.q, self.m)

    @cached_property
    def generator(self) -> np.ndarray:
        return monomial_rows(self.field, self.exponents.sorted, self.points)

    @cached_property
    def index(self) -> dict:
        return {e: i for i, e in enumerate(self.exponents.sorted)}

    @cached_property
    def _information_set(self):
        G = self.generator
        _, cols = linalg.rref(self.field, G)  # pivot columns form an information set
        if len(cols) != self.k:
            raise AssertionError(f"generator of {self!r} is rank deficient")
        return cols, linalg.inverse(self.field, G[:, cols])

    @cached_property
    def parity_check(self) -> np.ndarray:
        return linalg.nullspace(self.field, self.generator)

    def footprint_bound(self) -> int:
        return self.exponents.footprint_bound()

    def message_vector(self, message: dict) -> np.ndarray:
        vec = np.zeros(self.k, dtype=np.int64)
        for e, c in message.items():
            e = tuple(e)
            if e not in self.index:
                raise ValueError(f"monomial {e} is not in the code's exponent set")
            vec[self.index[e]] = c
        return vec

    def message_dict(self, vec) -> dict:
        return {e: int(c) for e, c in zip(self.exponents.sorted, vec) if c}

    def encode_vector(self, vec) -> np.ndarray:
        if self.k == 0:
            return np.zeros(self.n, dtype=np.int64)
        return self.field.dot(np.asarray(vec, dtype=np.int64), self.generator)

    def contains(self, word) -> bool:
        try:
            interpolate_exact(self, word)
        except NotACodeword:
            return False
        return True


def code_build(field: FieldSpec, exponents: ExponentSet) -> EvaluationCode:
    code = EvaluationCode(field, exponents)
    code._information_set  # asserts full rank
    return code


@lru_cache(maxsize=128)
def cached_code(field: FieldSpec, exponents: ExponentSet) -> EvaluationCode:
    """Shared, built-once code object for a (field, exponent set) pair."""
    return code_build(field, exponents)


def encode(code: EvaluationCode, message: dict) -> np.ndarray:
    return code.encode_vector(code.message_vector(message))


def interpolate_exact(code: EvaluationCode, word) -> dict:
    """The message whose encoding is ``word``; raises :class:`NotACodeword`."""
    word = np.asarray(word, dtype=np.int64)
    if word.shape != (code.n,):
        raise ValueError(f"word of length {word.shape} for a code of length {code.n}")
    if code.k == 0:
        if word.any():
            raise NotACodeword("nonzero word in the zero code")
        return {}
    cols, inv = code._information_set
    vec = code.field.dot(word[cols], inv)
    if not np.array_equal(code.encode_vector(vec), word):
        raise NotACodeword("word is not in the code")
    return code.message_dict(vec)


def schur(F: FieldSpec, u, v) -> np.ndarray:
    u, v = np.asarray(u), np.asarray(v)
    if u.shape != v.shape:
        raise ValueError("Schur product of words of different lengths")
    return F.mul(u, v)


def schur_power(F: FieldSpec, u, j: int) -> np.ndarray:
    u = np.asarray(u, dtype=np.int64)
    if j == 0:
        return np.ones_like(u)
    return F.pow(u, j)


def hamming(u, v) -> int:
    return int(np.count_nonzero(np.asarray(u) != np.asarray(v)))


# -- brute force over all codewords -------------------------------------------


def _check_guard(code: EvaluationCode, limit: int):
    if code.q**code.k > limit:
        raise GuardExceeded(f"q^k = {code.q}^{code.k} exceeds {limit}")


def iter_codewords(code: EvaluationCode, block: int = 2**15):
    """Yield ``(first_message_index, words)`` covering every codeword.

    Message index ``i`` has base-q digits equal to the coefficient vector,
    first coefficient most significant, so blocks come in lexicographic
    message order.
    """
    F, q, k = code.field, code.q, code.k
    if k == 0:
        yield 0, np.zeros((1, code.n), dtype=np.int64)
        return
    low = 0
    while low < k and q ** (low + 1) <= block:
        low += 1
    low = max(low, 1)
    G = code.generator
    words = np.zeros((1, code.n), dtype=np.int64)
    alphas = np.arange(q)
    for row in G[k - low:]:
        scaled = F.mul(alphas[:, None], row[None, :])
        words = F.add(words[:, None, :], scaled[None, :, :]).reshape(-1, code.n)
    high = k - low
    for i, prefix in enumerate(itertools.product(range(q), repeat=high)):
        if high:
            offset = F.dot(np.array(prefix, dtype=np.int64), G[:high])
            yield i * q**low, F.add(words, offset[None, :])
        else:
            yield 0, words


def message_from_index(code: EvaluationCode, idx: int) -> np.ndarray:
    digits = []
    for _ in range(code.k):
        idx, r = divmod(idx, code.q)
        digits.append(r)
    return np.array(digits[::-1], dtype=np.int64)


def min_weight_bruteforce(code: EvaluationCode, limit: int = BRUTE_FORCE_LIMIT) -> int:
    _check_guard(code, limit)
    best = code.n + 1
    for start, words in iter_codewords(code):
        w = np.count_nonzero(words, axis=1)
        if start == 0:
            w[0] = code.n + 1  # the zero message
        best = min(best, int(w.min()))
    return best


def nearest_codeword_full(code: EvaluationCode, y, limit: int = BRUTE_FORCE_LIMIT):
    """``(message_vector, codeword, distance)`` of a nearest codeword, ties
    broken towards the lexicographically smallest message."""
    _check_guard(code, limit)
    y = np.asarray(y, dtype=np.int64)
    best = (None, None, code.n + 1)
    for start, words in iter_codewords(code):
        dist = np.count_nonzero(words != y[None, :], axis=1)
        j = int(np.argmin(dist))
        if dist[j] < best[2]:
            best = (start + j, words[j].copy(), int(dist[j]))
    idx, word, dist = best
    return message_from_index(code, idx), word, dist


def nearest_codeword(code: EvaluationCode, y, limit: int = BRUTE_FORCE_LIMIT):
    _, word, dist = nearest_codeword_full(code, y, limit)
    return word, dist


def codewords_within(code: EvaluationCode, y, radius: int, limit: int = BRUTE_FORCE_LIMIT):
    """Every ``(message_vector, codeword, distance)`` within ``radius`` of ``y``."""
    _check_guard(code, limit)
    y = np.asarray(y, dtype=np.int64)
    out = []
    for start, words in iter_codewords(code):
        dist = np.count_nonzero(words != y[None, :], axis=1)
        for j in np.flatnonzero(dist <= radius):
            out.append((message_from_index(code, start + int(j)), words[j].copy(), int(dist[j])))
    return out


def corrupt(y, t: int, seed: int, q: int):
    """Change exactly ``t`` random coordinates of ``y`` to random different
    values.  Returns ``(word, sorted error positions)``."""
    y = np.asarray(y, dtype=np.int64)
    n = len(y)
    if not 0 <= t <= n:
        raise ValueError(f"cannot place {t} errors in a word of length {n}")
    rng = np.random.default_rng(seed)
    pos = np.sort(rng.choice(n, size=t, replace=False))
    shift = rng.integers(0, q - 1, size=t)
    out = y.copy()
    new = np.where(shift >= y[pos], shift + 1, shift)
    out[pos] = new
    return out, pos


def random_message(code: EvaluationCode, rng: np.random.Generator) -> dict:
    return code.message_dict(rng.integers(0, code.q, size=code.k))


def format_word(word) -> str:
    return ",".join(str(int(c)) for c in word)


def parse_word(text: str) -> np.ndarray:
    return np.array([int(c) for c in text.strip().split(",") if c.strip()], dtype=np.int64)


def format_poly(poly: dict) -> str:
    if not poly:
        return "0"
    return " ".join(f"{','.join(map(str, e))}:{c}" for e, c in sorted(poly.items()))
