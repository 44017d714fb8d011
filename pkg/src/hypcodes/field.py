"""Arithmetic in GF(p^k) with a canonical, reproducible representation.

Elements are integers in ``[0, q)``.  The integer ``sum(c_i * p**i)`` stands
for the residue class of ``c_0 + c_1 x + ... + c_{k-1} x^{k-1}`` modulo the
field's modulus.  The modulus is the lexicographically smallest monic
irreducible polynomial of degree ``k`` over GF(p), coefficients compared from
the constant term upward, so equal ``(p, k)`` always give identical fields.

All arithmetic methods accept Python ints or integer numpy arrays and
broadcast like numpy ufuncs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import NamedTuple

import numpy as np

MAX_ORDER = 2**20
# q x q lookup tables are built up to this order; above it we compute.
TABLE_ORDER = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q`` as ``p**k`` with ``p`` prime, or raise ``ValueError``."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, rest = 0, q
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, k


# -- polynomials over GF(p) as coefficient lists, constant term first --------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    b = _trim(list(b))
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _trim(a)
    return a


def is_irreducible(coeffs: tuple[int, ...] | list[int], p: int) -> bool:
    """Trial division of a monic polynomial by every monic polynomial of
    degree ``1..deg/2``."""
    f = _trim(list(coeffs))
    deg = len(f) - 1
    if deg < 1:
        return False
    for dd in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=dd):
            if not _poly_mod(f, list(low) + [1], p):
                return False
    return True


def canonical_modulus(p: int, k: int) -> tuple[int, ...]:
    # itertools.product yields (c_0, ..., c_{k-1}) with c_0 most significant,
    # which is exactly the constant-term-first lexicographic order.
    for low in itertools.product(range(p), repeat=k):
        cand = low + (1,)
        if is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class Arith(NamedTuple):
    add: object
    neg: object
    mul: object
    inv: object
    pow: object
    div: object


@dataclass(frozen=True)
class FieldSpec:
    """The field GF(p^k) together with its fixed modulus."""

    p: int
    k: int
    modulus: tuple[int, ...]
    q: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "q", self.p**self.k)

    def __repr__(self):
        return f"GF({self.q})"

    # -- scalar polynomial arithmetic, used only to build tables -----------

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def _undigits(self, ds) -> int:
        return sum(int(c) * self.p**i for i, c in enumerate(ds))

    def _slow_mul(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        if k == 1:
            return a * b % p
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        return self._undigits(_poly_mod(prod, list(self.modulus), p) + [0] * k)

    def _slow_pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._slow_mul(result, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return result

    @cached_property
    def primitive(self) -> int:
        """Smallest element (by index) generating the multiplicative group."""
        n = self.q - 1
        if n == 1:
            return 1
        primes = [d for d in range(2, n + 1) if n % d == 0 and is_prime(d)]
        for g in range(2, self.q):
            if all(self._slow_pow(g, n // r) != 1 for r in primes):
                return g
        raise AssertionError("no primitive element")  # pragma: no cover

    @cached_property
    def _exp_log(self) -> tuple[np.ndarray, np.ndarray]:
        n = self.q - 1
        exp = np.zeros(2 * n + 1, dtype=np.int64)
        log = np.zeros(self.q, dtype=np.int64)
        g, x = self.primitive, 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, g)
        exp[n:2 * n] = exp[:n]
        exp[2 * n] = exp[0]
        return exp, log

    @cached_property
    def digit_table(self) -> np.ndarray:
        """``(q, k)`` array: row ``a`` holds the base-p digits of ``a``."""
        idx = np.arange(self.q)
        return np.stack([(idx // self.p**i) % self.p for i in range(self.k)], axis=1)

    @cached_property
    def _place(self) -> np.ndarray:
        return self.p ** np.arange(self.k, dtype=np.int64)

    @cached_property
    def _tables(self):
        if self.q > TABLE_ORDER:
            return None
        idx = np.arange(self.q)
        a, b = idx[:, None], idx[None, :]
        return (
            self._add_compute(a, b),
            self._mul_compute(a, b),
            self._add_compute(a, self._neg_compute(b)),
        )

    # -- vectorised kernels --------------------------------------------------

    def _add_compute(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return np.bitwise_xor(a, b)
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for w in self._place:
            out += ((a // w + b // w) % self.p) * w
        return out

    def _neg_compute(self, a):
        if self.k == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        out = np.zeros(np.shape(a), dtype=np.int64)
        for w in self._place:
            out += ((-(a // w)) % self.p) * w
        return out

    def _mul_compute(self, a, b):
        exp, log = self._exp_log
        out = exp[log[a] + log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    @staticmethod
    def _wrap(x, scalar: bool):
        return int(x) if scalar else x

    @staticmethod
    def _prep(*xs):
        scalar = all(np.ndim(x) == 0 for x in xs)
        return scalar, [np.asarray(x, dtype=np.int64) for x in xs]

    def add(self, a, b):
        scalar, (a, b) = self._prep(a, b)
        if self.p == 2:
            return self._wrap(np.bitwise_xor(a, b), scalar)
        t = self._tables
        out = t[0][a, b] if t is not None else self._add_compute(a, b)
        return self._wrap(out, scalar)

    def sub(self, a, b):
        scalar, (a, b) = self._prep(a, b)
        if self.p == 2:
            return self._wrap(np.bitwise_xor(a, b), scalar)
        t = self._tables
        out = t[2][a, b] if t is not None else self._add_compute(a, self._neg_compute(b))
        return self._wrap(out, scalar)

    def neg(self, a):
        scalar, (a,) = self._prep(a)
        return self._wrap(self._neg_compute(a), scalar)

    def mul(self, a, b):
        scalar, (a, b) = self._prep(a, b)
        t = self._tables
        out = t[1][a, b] if t is not None else self._mul_compute(a, b)
        return self._wrap(out, scalar)

    def inv(self, a):
        scalar, (a,) = self._prep(a)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        exp, log = self._exp_log
        return self._wrap(exp[(self.q - 1 - log[a]) % (self.q - 1)], scalar)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        """``a**e``; scalars use square-and-multiply, arrays use logs."""
        if np.ndim(a) == 0 and np.ndim(e) == 0:
            a, e = int(a), int(e)
            if e < 0:
                a, e = self.inv(a), -e
            result = 1
            while e:
                if e & 1:
                    result = self.mul(result, a)
                a = self.mul(a, a)
                e >>= 1
            return result
        a = np.asarray(a, dtype=np.int64)
        e = np.asarray(e, dtype=np.int64)
        if np.any((a == 0) & (e < 0)):
            raise ZeroDivisionError("negative power of zero")
        exp, log = self._exp_log
        out = exp[(log[a] * e) % (self.q - 1)]
        return np.where(a == 0, np.where(e == 0, 1, 0), out)

    def sum(self, a, axis=None):
        """Field sum along ``axis``."""
        a = np.asarray(a, dtype=np.int64)
        if self.k == 1:
            return a.sum(axis=axis) % self.p
        if self.p == 2:
            if axis is None:
                return np.bitwise_xor.reduce(a, axis=None)
            return np.bitwise_xor.reduce(a, axis=axis)
        digits = self.digit_table[a]
        if axis is None:
            s = digits.reshape(-1, self.k).sum(axis=0) % self.p
        else:
            ax = axis if axis >= 0 else a.ndim + axis
            s = digits.sum(axis=ax) % self.p
        return s @ self._place

    def dot(self, A, B):
        """Matrix product over the field for 1-d or 2-d operands."""
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if self.k == 1 and A.shape[-1] * (self.p - 1) ** 2 < 2**62:
            return (A @ B) % self.p
        vec_a, vec_b = A.ndim == 1, B.ndim == 1
        A2 = A[None, :] if vec_a else A
        B2 = B[:, None] if vec_b else B
        out = np.zeros((A2.shape[0], B2.shape[1]), dtype=np.int64)
        for j in range(A2.shape[1]):
            col = A2[:, j]
            if not col.any():
                continue
            out = self.add(out, self.mul(col[:, None], B2[j][None, :]))
        if vec_a:
            out = out[0]
        if vec_b:
            out = out[..., 0]
        return out

    @cached_property
    def power_table(self) -> np.ndarray:
        """``power_table[x, e] = x**e`` for ``e`` in ``[0, q-1]``; ``0**0 = 1``."""
        x = np.arange(self.q)[:, None]
        e = np.arange(self.q)[None, :]
        return self.pow(x, e)

    def elements(self) -> list[int]:
        return list(range(self.q))

    def serialize(self) -> str:
        return f"GF p={self.p} k={self.k} mod={','.join(map(str, self.modulus))}"


@lru_cache(maxsize=None)
def field_new(p: int, k: int = 1) -> FieldSpec:
    """Canonical GF(p^k)."""
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if k < 1:
        raise ValueError(f"k={k} must be at least 1")
    if p**k > MAX_ORDER:
        raise ValueError(f"q={p}**{k} exceeds the size guard {MAX_ORDER}")
    return FieldSpec(p, k, canonical_modulus(p, k))


def gf(q: int) -> FieldSpec:
    """Field of order ``q`` (any prime power)."""
    return field_new(*prime_power(q))


def field_arith(spec: FieldSpec) -> Arith:
    return Arith(spec.add, spec.neg, spec.mul, spec.inv, spec.pow, spec.div)


def field_enumerate(spec: FieldSpec) -> list[int]:
    return spec.elements()


def parse_field(line: str) -> FieldSpec:
    """Inverse of :meth:`FieldSpec.serialize`.  The modulus must be canonical."""
    parts = line.split()
    if not parts or parts[0] != "GF":
        raise ValueError(f"not a field line: {line!r}")
    kv = dict(part.split("=", 1) for part in parts[1:])
    F = field_new(int(kv["p"]), int(kv["k"]))
    if "mod" in kv:
        mod = tuple(int(c) for c in kv["mod"].split(","))
        if mod != F.modulus:
            raise ValueError(f"modulus {mod} is not the canonical {F.modulus}")
    return F
