"""Unique decoders for monomial codes.

Every decoder exposes ``decode(y) -> DecodeResult | None``; ``None`` means
the decoder declared failure (more errors than it can handle).  The
building blocks are

* :class:`RSDecoder`, Berlekamp-Massey on full-length Reed-Solomon codes;
* :class:`SyndromeDecoder` and :class:`NearestDecoder`, generic table and
  exhaustive decoders for small codes;
* :class:`CubeDecoder`, the recursive decoder of tensor products of RS codes;

and the combinators :func:`decode_supercode`, :func:`decode_coset` and
:func:`decode_intermediate_m2`.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np

from . import linalg
from .codes import (
    BRUTE_FORCE_LIMIT,
    EvaluationCode,
    GuardExceeded,
    cached_code,
    NotACodeword,
    code_build,
    hamming,
    interpolate_exact,
    iter_codewords,
    message_from_index,
    nearest_codeword_full,
)
from .field import FieldSpec
from .lattice import (
    ExponentSet,
    build_cube_set,
    build_hyp_set,
    build_rm_set,
    smallest_rm_containing_hyp,
)

TABLE_LIMIT = 2**22
_HASH_PRIME = 2**61 - 1


@dataclass
class DecodeResult:
    codeword: np.ndarray
    message: dict
    errors_corrected: int
    oracle_calls: Counter = field(default_factory=Counter)


def _result(code: EvaluationCode, y, codeword, message=None, calls=None) -> DecodeResult:
    if message is None:
        message = interpolate_exact(code, codeword)
    return DecodeResult(np.asarray(codeword), message, hamming(y, codeword), Counter(calls or {}))


def capability(code: EvaluationCode) -> int:
    """``floor((FB - 1) / 2)``; the footprint bound is exact for the code
    families used here and a safe lower bound otherwise."""
    return max(0, (code.footprint_bound() - 1) // 2)


# -- Reed-Solomon ------------------------------------------------------------------


def berlekamp_massey(F: FieldSpec, S) -> tuple[list[int], int]:
    """Shortest LFSR ``(C, L)`` generating ``S``: ``C[0] = 1`` and
    ``S[j] + sum_{i=1..L} C[i] S[j-i] = 0`` for ``L <= j < len(S)``."""
    C, B = [1], [1]
    L, shift, b = 0, 1, 1
    for j in range(len(S)):
        disc = S[j]
        for i in range(1, L + 1):
            if i < len(C):
                disc = F.add(disc, F.mul(C[i], S[j - i]))
        if disc == 0:
            shift += 1
            continue
        coef = F.div(disc, b)
        T = C[:]
        C = C + [0] * max(0, len(B) + shift - len(C))
        for i, bi in enumerate(B):
            C[i + shift] = F.sub(C[i + shift], F.mul(coef, bi))
        if 2 * L <= j:
            L, B, b, shift = j + 1 - L, T, disc, 1
        else:
            shift += 1
    while len(C) > 1 and C[-1] == 0:
        C.pop()
    return C, L


@dataclass(frozen=True, eq=False)
class RSDecoder:
    """Bounded-distance decoder of ``RS_q(s)``: polynomials of degree ``<= s``
    evaluated at all ``q`` field elements (in index order).

    ``axis`` only records which variable a cube decoder uses it for.
    """

    field: FieldSpec
    s: int
    axis: int = 0

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def radius(self) -> int:
        return max(0, (self.q - self.s - 1) // 2)

    @cached_property
    def code(self) -> EvaluationCode:
        return code_build(self.field, build_rm_set(self.q, 1, min(self.s, self.q - 1)))

    @cached_property
    def checks(self) -> np.ndarray:
        # sum_x x^l f(x) = 0 for deg f + l <= q - 2
        nchecks = max(0, self.q - self.s - 1)
        return self.field.power_table[:, :nchecks].T.copy()

    @cached_property
    def _coeff_inverse(self) -> np.ndarray:
        # first s+1 points determine the polynomial
        s = min(self.s, self.q - 1)
        return linalg.inverse(self.field, self.code.generator[:, : s + 1])

    def coefficients(self, codeword) -> np.ndarray:
        s = min(self.s, self.q - 1)
        return self.field.dot(np.asarray(codeword)[: s + 1], self._coeff_inverse)

    def correct(self, y) -> np.ndarray | None:
        """The codeword within ``radius`` of ``y``, or ``None``."""
        F = self.field
        y = np.asarray(y, dtype=np.int64)
        if len(y) != self.q:
            raise ValueError(f"RS word must have length {self.q}")
        if self.checks.shape[0] == 0:
            return y.copy()
        S = F.dot(self.checks, y)
        if not S.any():
            return y.copy()
        C, L = berlekamp_massey(F, [int(v) for v in S])
        if L > self.radius:
            return None
        deg = len(C) - 1
        # roots of C are inverse error locators; a length exceeding deg C
        # means the zero point is in error too (it only touches S_0)
        xs = np.arange(1, self.q)
        vals = np.zeros(len(xs), dtype=np.int64)
        inv = F.inv(xs)
        for c in reversed(C):
            vals = F.add(F.mul(vals, inv), c)
        positions = [int(x) for x in xs[vals == 0]]
        if len(positions) != deg:
            return None
        if L > deg:
            positions = [0] + positions
        A = self.checks[:, positions]
        e = linalg.solve(F, A, S)
        if e is None or not e.all():
            return None
        out = y.copy()
        out[positions] = F.sub(y[positions], e)
        return out

    def decode(self, y) -> DecodeResult | None:
        c = self.correct(y)
        if c is None:
            return None
        return DecodeResult(c, self.code.message_dict(self.coefficients(c)), hamming(y, c), Counter(rs=1))


# -- generic small-code decoders -----------------------------------------------


@dataclass(eq=False)
class NearestDecoder:
    """Exhaustive nearest-codeword decoding (always answers)."""

    code: EvaluationCode
    limit: int = BRUTE_FORCE_LIMIT

    def __post_init__(self):
        if self.code.q**self.code.k > self.limit:
            raise GuardExceeded(f"q^k = {self.code.q}^{self.code.k} exceeds {self.limit}")

    @property
    def radius(self) -> int:
        return capability(self.code)

    @cached_property
    def _words(self) -> np.ndarray:
        return np.concatenate([w for _, w in iter_codewords(self.code)])

    def decode(self, y) -> DecodeResult:
        y = np.asarray(y, dtype=np.int64)
        if self.code.q**self.code.k <= 2**16:
            dist = np.count_nonzero(self._words != y[None, :], axis=1)
            j = int(np.argmin(dist))
            vec, word = message_from_index(self.code, j), self._words[j]
        else:
            vec, word, _ = nearest_codeword_full(self.code, y, self.limit)
        return DecodeResult(word.copy(), self.code.message_dict(vec), hamming(y, word), Counter(nearest=1))


def _table_size(n: int, q: int, t: int) -> int:
    from math import comb

    return sum(comb(n, w) * (q - 1) ** w for w in range(t + 1))


@dataclass(eq=False)
class SyndromeDecoder:
    """Bounded-distance decoding by a table of all error patterns of weight
    at most ``radius`` keyed by syndrome."""

    code: EvaluationCode
    radius: int | None = None
    limit: int = TABLE_LIMIT

    def __post_init__(self):
        if self.radius is None:
            self.radius = capability(self.code)
        size = _table_size(self.code.n, self.code.q, self.radius)
        if size > self.limit:
            raise GuardExceeded(f"syndrome table of {size} entries exceeds {self.limit}")

    @cached_property
    def _multipliers(self) -> np.ndarray:
        r = self.code.parity_check.shape[0]
        q = self.code.q
        if r * np.log2(q) < 62:
            return q ** np.arange(r, dtype=np.int64)  # exact packing
        # hashed keys; every hit is re-checked against the syndrome
        return np.random.default_rng(0).integers(1, 2**40, size=r, dtype=np.int64)

    def _keys(self, syn: np.ndarray) -> np.ndarray:
        mult = self._multipliers
        if self.code.parity_check.shape[0] * np.log2(self.code.q) < 62:
            return syn @ mult
        acc = np.zeros(syn.shape[:-1], dtype=np.int64)
        for i, mu in enumerate(mult):
            acc = (acc + syn[..., i] * mu) % _HASH_PRIME
        return acc

    @cached_property
    def table(self):
        """Sorted syndrome keys plus, per entry, its weight and pattern index."""
        F, n, q = self.code.field, self.code.n, self.code.q
        Hc = self.code.parity_check  # r x n
        scaled = F.mul(np.arange(1, q)[None, :, None], Hc.T[:, None, :])  # n x (q-1) x r
        keys = [np.zeros(1, dtype=np.int64)]
        tags = [np.zeros((1, 2), dtype=np.int64)]
        patterns = [(np.zeros((1, 0), dtype=np.int64), np.zeros((1, 0), dtype=np.int64))]
        for w in range(1, self.radius + 1):
            combos = np.array(list(itertools.combinations(range(n), w)), dtype=np.int64)
            values = np.array(list(itertools.product(range(q - 1), repeat=w)), dtype=np.int64)
            patterns.append((combos, values + 1))
            step = max(1, 2**18 // len(values))
            for lo in range(0, len(combos), step):
                chunk = combos[lo : lo + step]
                syn = scaled[chunk[:, None, 0], values[None, :, 0]]
                for j in range(1, w):
                    syn = F.add(syn, scaled[chunk[:, None, j], values[None, :, j]])
                keys.append(self._keys(syn).reshape(-1))
                idx = np.arange(lo * len(values), (lo + len(chunk)) * len(values), dtype=np.int64)
                tags.append(np.stack([np.full_like(idx, w), idx], axis=1))
        keys = np.concatenate(keys)
        tags = np.concatenate(tags)
        order = np.argsort(keys, kind="stable")  # lighter patterns first on ties
        keys, tags = keys[order], tags[order]
        first = np.ones(len(keys), dtype=bool)
        first[1:] = keys[1:] != keys[:-1]
        return keys[first], tags[first], patterns

    def error_pattern(self, syndrome: np.ndarray):
        keys, tags, patterns = self.table
        key = self._keys(syndrome)
        i = int(np.searchsorted(keys, key))
        if i == len(keys) or keys[i] != key:
            return None
        w, idx = (int(v) for v in tags[i])
        combos, values = patterns[w]
        return combos[idx // len(values)], values[idx % len(values)]

    def decode(self, y) -> DecodeResult | None:
        F = self.code.field
        y = np.asarray(y, dtype=np.int64)
        syndrome = F.dot(self.code.parity_check, y)
        hit = self.error_pattern(syndrome)
        if hit is None:
            return None
        pos, vals = hit
        c = y.copy()
        c[pos] = F.sub(y[pos], vals)
        if F.dot(self.code.parity_check, c).any():
            return None  # hashed key collision
        return _result(self.code, y, c, calls={"syndrome": 1})


def _is_rs(code: EvaluationCode) -> bool:
    return code.m == 1 and code.exponents.members == build_rm_set(code.q, 1, code.k - 1).members


def make_decoder(code: EvaluationCode):
    """Pick a decoder: Berlekamp-Massey for RS codes, a syndrome table when
    it fits, exhaustive search otherwise.  Decoders are cached per code."""
    return _decoder_for(code.field, code.exponents)


@lru_cache(maxsize=64)
def _decoder_for(F: FieldSpec, exponents: ExponentSet):
    code = cached_code(F, exponents)
    if code.k and _is_rs(code):
        return RSDecoder(code.field, code.k - 1)
    t = capability(code)
    if _table_size(code.n, code.q, t) <= TABLE_LIMIT:
        return SyndromeDecoder(code, t)
    return NearestDecoder(code)


# -- combinators ---------------------------------------------------------------------


def decode_supercode(inner: EvaluationCode, outer_decoder, y) -> DecodeResult | None:
    """Decode in a supercode, accept only results lying in ``inner``."""
    if not inner.exponents <= outer_decoder.code.exponents:
        raise ValueError("inner code is not contained in the outer code")
    res = outer_decoder.decode(y)
    if res is None:
        return None
    try:
        message = interpolate_exact(inner, res.codeword)
    except NotACodeword:
        return None
    return DecodeResult(res.codeword, message, res.errors_corrected, Counter(outer=1) + res.oracle_calls)


def coset_candidates(F: FieldSpec, q: int, m: int, extra: ExponentSet, order: str = "lex"):
    """Yield ``(message, ev(message))`` over all polynomials supported on
    ``extra`` in lexicographic (or reversed) coefficient order."""
    code = EvaluationCode(F, extra)
    blocks = iter_codewords(code)
    if order == "reverse":
        blocks = reversed(list(blocks))
    elif order != "lex":
        raise ValueError(f"unknown order {order!r}")
    for start, words in blocks:
        idx = range(len(words)) if order == "lex" else range(len(words) - 1, -1, -1)
        for j in idx:
            yield (lambda i=start + j: code.message_dict(message_from_index(code, i))), words[j]


def decode_coset(A: EvaluationCode, B: EvaluationCode, dec_A, y, radius: int | None = None,
                 target: ExponentSet | None = None, order: str = "lex") -> DecodeResult | None:
    """Decode ``C_B`` with a decoder of ``C_A``, ``A`` a subset of ``B``.

    For each ``f`` supported on ``B - A``, decode ``y - ev(f)`` in ``C_A``;
    accept ``c_A + ev(f)`` when it lies within ``radius`` (default ``t_B``)
    of ``y`` and, if ``target`` is given, its support lies in ``target``.
    """
    if not A.exponents <= B.exponents:
        raise ValueError("A is not contained in B")
    F = A.field
    y = np.asarray(y, dtype=np.int64)
    radius = capability(B) if radius is None else radius
    extra = B.exponents.difference(A.exponents)
    calls = Counter()
    for make_f, ev_f in coset_candidates(F, A.q, A.m, extra, order):
        res = dec_A.decode(F.sub(y, ev_f))
        calls["inner"] += 1
        if res is None:
            continue
        calls += res.oracle_calls
        c = F.add(res.codeword, ev_f)
        if hamming(y, c) > radius:
            continue
        message = {**res.message, **make_f()}
        if target is not None and any(e not in target for e in message):
            continue
        return DecodeResult(c, message, hamming(y, c), calls)
    return None


@dataclass(frozen=True)
class IntermediatePlan:
    q: int
    d: int
    s: int  # smallest RM degree containing the hyperbolic set
    rm_degree: int  # s - 1, the RM code actually decoded
    extra: int  # |H - RM(s-1)|
    radius: int  # min(t of RM(s-1), t of Hyp)
    candidates: int  # q^extra

    @classmethod
    def build(cls, q: int, d: int) -> "IntermediatePlan":
        s = smallest_rm_containing_hyp(q, 2, d)
        H = build_hyp_set(q, 2, d)
        R = build_rm_set(q, 2, s - 1) if s >= 1 else ExponentSet(q, 2, frozenset(), "RM(-1)")
        extra = len(H.difference(R))
        # beyond t_H two hyperbolic codewords could tie, so cap at it
        t_R = max(0, (R.footprint_bound() - 1) // 2) if len(R) else 0
        radius = min(t_R, max(0, (H.footprint_bound() - 1) // 2))
        return cls(q, d, s, s - 1, extra, radius, q**extra)


def decode_intermediate_m2(F: FieldSpec, d: int, y, dec_R=None, order: str = "lex") -> DecodeResult | None:
    """Decode ``Hyp_q(d, 2)`` through the largest RM code not containing it.

    Runs coset decoding of ``RM(s-1) + Hyp`` over ``RM(s-1)``, accepting only
    words of the hyperbolic code within ``t_{RM(s-1)}`` of ``y``.
    """
    q = F.q
    plan = IntermediatePlan.build(q, d)
    H = build_hyp_set(q, 2, d)
    if plan.s == 0:
        res = make_decoder(cached_code(F, H)).decode(y)
        return res
    R = build_rm_set(q, 2, plan.rm_degree)
    A = cached_code(F, R)
    B = cached_code(F, R.union(H))
    dec_R = make_decoder(A) if dec_R is None else dec_R
    return decode_coset(A, B, dec_R, y, radius=plan.radius, target=H, order=order)


# -- cube codes ----------------------------------------------------------------------


def cube_rs_calls(q: int, s: int, m: int) -> int:
    """RS invocations of :class:`CubeDecoder`: ``f(m) = q f(m-1) + (s+1)^(m-1)``."""
    return sum((s + 1) ** (m - 1 - i) * q**i for i in range(m))


def cube_radius(q: int, s: int, m: int) -> int:
    return (max(0, (q - s - 1) // 2) + 1) ** m - 1


def _tensor_eval(F: FieldSpec, coeffs: np.ndarray, V: np.ndarray) -> np.ndarray:
    """Evaluate a coefficient tensor ``(s+1,)*m`` at all points, giving ``(q,)*m``."""
    out = coeffs
    for axis in range(out.ndim):
        moved = np.moveaxis(out, axis, -1)
        shape = moved.shape
        flat = F.dot(moved.reshape(-1, shape[-1]), V.T)
        out = np.moveaxis(flat.reshape(shape[:-1] + (V.shape[0],)), -1, axis)
    return out


@dataclass(frozen=True, eq=False)
class CubeDecoder:
    """Recursive decoder of ``Cube_q(s, m)``, the m-fold tensor power of
    ``RS_q(s)``, correcting up to ``(t_RS + 1)^m - 1`` errors."""

    field: FieldSpec
    s: int
    m: int

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def radius(self) -> int:
        return cube_radius(self.q, self.s, self.m)

    @cached_property
    def code(self) -> EvaluationCode:
        return EvaluationCode(self.field, build_cube_set(self.q, self.m, self.s))

    @cached_property
    def rs(self) -> RSDecoder:
        return RSDecoder(self.field, self.s)

    def _coefficients(self, block: np.ndarray, m: int, calls: Counter) -> np.ndarray | None:
        """Coefficient tensor of the decoded block (``block`` has shape
        ``(q,)*m``), or ``None`` if an RS stage along the first axis failed."""
        q, s = self.q, self.s
        if m == 1:
            calls["rs"] += 1
            c = self.rs.correct(block)
            return None if c is None else self.rs.coefficients(c)
        rows = np.zeros((q,) + (s + 1,) * (m - 1), dtype=np.int64)
        for a in range(q):
            sub = self._coefficients(block[a], m - 1, calls)
            if sub is not None:
                rows[a] = sub  # failed blocks stay zero and count as symbol errors
        out = np.zeros((s + 1,) * m, dtype=np.int64)
        ok = True
        for j in itertools.product(range(s + 1), repeat=m - 1):
            calls["rs"] += 1
            c = self.rs.correct(rows[(slice(None),) + j])
            if c is None:
                ok = False
                continue
            out[(slice(None),) + j] = self.rs.coefficients(c)
        return out if ok else None

    def decode(self, y) -> DecodeResult | None:
        q, m = self.q, self.m
        y = np.asarray(y, dtype=np.int64)
        if y.shape != (q**m,):
            raise ValueError(f"cube word must have length {q**m}")
        calls = Counter()
        coeffs = self._coefficients(y.reshape((q,) * m), m, calls)
        if coeffs is None:
            return None
        V = self.field.power_table[:, : self.s + 1]
        c = _tensor_eval(self.field, coeffs, V).reshape(-1)
        message = {tuple(int(v) for v in e): int(coeffs[e]) for e in zip(*np.nonzero(coeffs))}
        return DecodeResult(c, message, hamming(y, c), calls)


def decode_cube(F: FieldSpec, s: int, m: int, y) -> DecodeResult | None:
    return CubeDecoder(F, s, m).decode(y)
