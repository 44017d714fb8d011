"""Sparse multivariate polynomials over GF(q).

A polynomial is a ``dict`` mapping exponent tuples to nonzero element
indices.  Products are *not* reduced under ``X^q = X`` unless
:func:`reduce` is called, so these are genuine polynomial-ring operations.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .field import FieldSpec
from .lattice import reduce_exponent


@lru_cache(maxsize=None)
def _scalar_tables(F: FieldSpec):
    add = F.add(np.arange(F.q)[:, None], np.arange(F.q)[None, :]).tolist()
    mul = F.mul(np.arange(F.q)[:, None], np.arange(F.q)[None, :]).tolist()
    return add, mul


class Scalars:
    """Fast scalar ``add``/``mul`` through nested-list tables."""

    def __init__(self, F: FieldSpec):
        self.F = F
        if F.q <= 1024:
            self._add, self._mul = _scalar_tables(F)
            self.add = lambda a, b: self._add[a][b]
            self.mul = lambda a, b: self._mul[a][b]
        else:
            self.add = lambda a, b: int(F.add(a, b))
            self.mul = lambda a, b: int(F.mul(a, b))
        self.neg = lambda a: int(F.neg(a))
        self.inv = lambda a: int(F.inv(a))


def _acc(S: Scalars, out: dict, e, c):
    v = S.add(out.get(e, 0), c)
    if v:
        out[e] = v
    else:
        out.pop(e, None)


def add(F: FieldSpec, f: dict, g: dict) -> dict:
    S = Scalars(F)
    out = dict(f)
    for e, c in g.items():
        _acc(S, out, e, c)
    return out


def neg(F: FieldSpec, f: dict) -> dict:
    return {e: int(F.neg(c)) for e, c in f.items()}


def sub(F: FieldSpec, f: dict, g: dict) -> dict:
    return add(F, f, neg(F, g))


def scale(F: FieldSpec, f: dict, c: int) -> dict:
    if c == 0:
        return {}
    S = Scalars(F)
    return {e: S.mul(c, v) for e, v in f.items()}


def mul(F: FieldSpec, f: dict, g: dict) -> dict:
    S = Scalars(F)
    out: dict = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            _acc(S, out, tuple(a + b for a, b in zip(e1, e2)), S.mul(c1, c2))
    return out


def power(F: FieldSpec, f: dict, j: int, m: int) -> dict:
    out = {(0,) * m: 1}
    for _ in range(j):
        out = mul(F, out, f)
    return out


def reduce(F: FieldSpec, f: dict) -> dict:
    """Image under ``X_i^q = X_i``."""
    S = Scalars(F)
    out: dict = {}
    for e, c in f.items():
        _acc(S, out, reduce_exponent(e, F.q), c)
    return out


def constant(c: int, m: int) -> dict:
    return {(0,) * m: c} if c else {}


def degree_bounds(f: dict, m: int) -> tuple[int, ...]:
    if not f:
        return (-1,) * m
    return tuple(max(e[j] for e in f) for j in range(m))


def evaluate_at(F: FieldSpec, f: dict, point) -> int:
    S = Scalars(F)
    val = 0
    for e, c in f.items():
        term = c
        for x, k in zip(point, e):
            term = S.mul(term, int(F.pow(int(x), k)))
        val = S.add(val, term)
    return val
