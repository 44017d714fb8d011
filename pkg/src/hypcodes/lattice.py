"""Exponent sets of monomial codes and their containment combinatorics.

An exponent vector ``i`` in ``[0, q-1]^m`` stands for the monomial
``X_1^{i_1} ... X_m^{i_m}``.  Its *footprint* ``prod(q - i_j)`` bounds the
weight of every nonzero codeword whose leading monomial it is, so the
minimum footprint over a set bounds the distance of its code.

Integer roots and logarithms are evaluated with exact integer comparisons;
the one closed form that genuinely needs real logarithms
(:func:`smallest_rm_containing_hyp`) is cross-checked against the exact set
computation and corrected when they disagree.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable

import numpy as np

log = logging.getLogger(__name__)

Vector = tuple[int, ...]


def _box(q: int, m: int) -> Iterable[Vector]:
    return itertools.product(range(q), repeat=m)


@dataclass(frozen=True)
class ExponentSet:
    """A finite set of reduced exponent vectors in ``[0, q-1]^m``."""

    q: int
    m: int
    members: frozenset
    tag: str = "CUSTOM"

    def __post_init__(self):
        for v in self.members:
            if len(v) != self.m or any(c < 0 or c >= self.q for c in v):
                raise ValueError(f"{v} is not in [0,{self.q - 1}]^{self.m}")

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.sorted)

    def __contains__(self, v):
        return tuple(v) in self.members

    def __le__(self, other: "ExponentSet") -> bool:
        return self.members <= other.members

    def __ge__(self, other: "ExponentSet") -> bool:
        return self.members >= other.members

    def __eq__(self, other):
        if not isinstance(other, ExponentSet):
            return NotImplemented
        return (self.q, self.m, self.members) == (other.q, other.m, other.members)

    def __hash__(self):
        return hash((self.q, self.m, self.members))

    @cached_property
    def sorted(self) -> list[Vector]:
        return sorted(self.members)

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.sorted, dtype=np.int64).reshape(len(self), self.m)

    def difference(self, other: "ExponentSet") -> "ExponentSet":
        return ExponentSet(self.q, self.m, self.members - other.members)

    def union(self, other: "ExponentSet") -> "ExponentSet":
        return ExponentSet(self.q, self.m, self.members | other.members)

    def footprint_bound(self) -> int:
        """Minimum footprint over the members (``q^m + 1`` for the empty set,
        the zero code having no nonzero word)."""
        if not self.members:
            return self.q**self.m + 1
        return min(footprint(v, self.q) for v in self.members)

    def max_degree(self) -> int:
        return max((sum(v) for v in self.members), default=-1)

    def serialize(self) -> str:
        lines = [f"SET q={self.q} m={self.m} tag={self.tag}"]
        lines += [",".join(map(str, v)) for v in self.sorted]
        return "\n".join(lines) + "\n"


def parse_exponent_set(text: str) -> ExponentSet:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    head = lines[0].split()
    if head[0] != "SET":
        raise ValueError(f"not an exponent set header: {lines[0]!r}")
    kv = dict(part.split("=", 1) for part in head[1:])
    q, m = int(kv["q"]), int(kv["m"])
    members = frozenset(tuple(int(c) for c in ln.split(",")) for ln in lines[1:])
    return ExponentSet(q, m, members, kv.get("tag", "CUSTOM"))


# -- footprints and the three families --------------------------------------


def footprint(e: Iterable[int], q: int) -> int:
    out = 1
    for c in e:
        if c < 0 or c > q - 1:
            raise ValueError(f"coordinate {c} outside [0,{q - 1}]")
        out *= q - c
    return out


@lru_cache(maxsize=512)
def build_rm_set(q: int, m: int, s: int) -> ExponentSet:
    if s < 0:
        raise ValueError("degree must be non-negative")
    return ExponentSet(q, m, frozenset(v for v in _box(q, m) if sum(v) <= s), f"RM({s})")


@lru_cache(maxsize=512)
def build_hyp_set(q: int, m: int, d: int) -> ExponentSet:
    """Exponents with footprint at least ``d``; empty when ``d > q^m``."""
    if d < 1:
        raise ValueError("d must be at least 1")
    members = frozenset(v for v in _box(q, m) if math.prod(q - c for c in v) >= d)
    return ExponentSet(q, m, members, f"HYP({d})")


@lru_cache(maxsize=512)
def build_cube_set(q: int, m: int, s: int) -> ExponentSet:
    if not 0 <= s <= q - 1:
        raise ValueError(f"cube order {s} outside [0,{q - 1}]")
    return ExponentSet(q, m, frozenset(_box(s + 1, m)), f"CUBE({s})")


def box_set(q: int, m: int) -> ExponentSet:
    return build_cube_set(q, m, q - 1)


# -- Reed-Muller distance and hyperbolicity ---------------------------------


def rm_min_distance(q: int, m: int, s: int) -> int:
    if not 0 <= s <= (q - 1) * m:
        raise ValueError(f"degree {s} outside [0,{(q - 1) * m}]")
    t, r = divmod(s, q - 1)
    if t == m:  # s = m(q-1): the whole space
        return 1
    return (q - r) * q ** (m - 1 - t)


def max_product_at_sum(q: int, m: int, s: int) -> int:
    """Largest footprint among exponents with coordinate sum exactly ``s``."""
    if not 0 <= s <= m * (q - 1):
        raise ValueError(f"sum {s} outside [0,{m * (q - 1)}]")
    t, r = divmod(s, m)
    return (q - t - 1) ** r * (q - t) ** (m - r)


def rm_is_hyperbolic(q: int, m: int, s: int) -> tuple[bool, int]:
    """Whether ``RM_q(s, m)`` equals ``Hyp_q(delta, m)`` with ``delta`` its
    minimum distance.  Returns ``(answer, delta)``."""
    if not 0 <= s < m * (q - 1):
        raise ValueError(f"degree {s} outside [0,{m * (q - 1)})")
    delta = rm_min_distance(q, m, s)
    return max_product_at_sum(q, m, s + 1) < delta, delta


# -- Reed-Muller and cube codes bracketing a hyperbolic code -----------------


def _ceil_root(d: int, m: int) -> int:
    """Smallest integer ``x`` with ``x**m >= d``."""
    x = max(1, round(d ** (1.0 / m)))
    while x**m < d:
        x += 1
    while x > 1 and (x - 1) ** m >= d:
        x -= 1
    return x


def _check_d(q: int, m: int, d: int):
    if not 1 <= d <= q**m:
        raise ValueError(f"d={d} outside [1,{q**m}]")


def smallest_rm_closed_form(q: int, m: int, d: int) -> int | None:
    """``m*floor(a) + r`` with ``a = q - d**(1/m)`` and ``r`` from the log
    ratio; ``None`` when the ratio is degenerate (integral ``a``, or
    ``floor(a) = q-1``)."""
    _check_d(q, m, d)
    root = d ** (1.0 / m)
    base = _ceil_root(d, m)  # q - floor(a)
    if base - 1 <= 0 or math.isclose(root, round(root)):
        return None
    r = math.floor(m * math.log(root / base) / math.log((base - 1) / base))
    return m * (q - base) + r


def smallest_rm_containing_hyp(q: int, m: int, d: int) -> int:
    """Smallest ``s`` with ``Hyp_q(d, m)`` inside ``RM_q(s, m)``.

    The closed form is tried first and accepted only if the containment and
    its tightness hold set-wise; otherwise (degenerate or float-rounded
    input) the answer is the largest coordinate sum in the hyperbolic set.
    """
    H = build_hyp_set(q, m, d)
    guess = smallest_rm_closed_form(q, m, d)
    if guess is not None and guess >= 0:
        if H <= build_rm_set(q, m, guess) and (guess == 0 or not H <= build_rm_set(q, m, guess - 1)):
            return guess
        log.debug("closed form %s rejected for q=%s m=%s d=%s", guess, q, m, d)
    return H.max_degree()


def largest_rm_inside_hyp(q: int, m: int, d: int) -> int:
    """Largest ``s`` with ``RM_q(s, m)`` inside ``Hyp_q(d, m)``."""
    _check_d(q, m, d)
    c = 0
    while q**c < d:
        c += 1
    # ceil(d / q^(c-1)), also for c = 0
    ratio = Fraction(d) / Fraction(q) ** (c - 1)
    return (m - c) * (q - 1) + q - math.ceil(ratio)


def cube_hyp_bounds(q: int, m: int, d: int) -> tuple[int, int]:
    """``(s_inside, s_outside)``: the largest cube inside and the smallest
    cube containing ``Hyp_q(d, m)``."""
    _check_d(q, m, d)
    s_inside = max(s for s in range(q) if (q - s) ** m >= d)
    s_outside = q - math.ceil(Fraction(d, q ** (m - 1)))
    return s_inside, s_outside


@dataclass(frozen=True)
class ContainmentReport:
    q: int
    m: int
    d: int
    s_largest_rm: int
    s_smallest_rm: int
    s_largest_cube: int
    s_smallest_cube: int


def containment_report(q: int, m: int, d: int) -> ContainmentReport:
    inside, outside = cube_hyp_bounds(q, m, d)
    return ContainmentReport(
        q, m, d,
        largest_rm_inside_hyp(q, m, d),
        smallest_rm_containing_hyp(q, m, d),
        inside,
        outside,
    )


# -- Minkowski powers and the interpolation level sets ------------------------


def minkowski_power(H: ExponentSet, i: int) -> frozenset:
    """All sums of ``i`` members of ``H`` (unreduced; ``{0}`` when ``i = 0``)."""
    if i < 0:
        raise ValueError("i must be non-negative")
    out = frozenset([(0,) * H.m])
    for _ in range(i):
        out = frozenset(
            tuple(a + b for a, b in zip(u, v)) for u in out for v in H.members
        )
    return out


def reduce_exponent(e: Iterable[int], q: int) -> Vector:
    """Image of an exponent under ``X^q = X``."""
    return tuple(c if c <= q - 1 else (c - 1) % (q - 1) + 1 for c in e)


def _maximal(vectors) -> np.ndarray:
    """The maximal elements of a finite set of vectors (componentwise order)."""
    arr = np.array(sorted(set(vectors)), dtype=np.int64)
    if len(arr) == 0:
        return arr.reshape(0, 0)
    keep = []
    for i, v in enumerate(arr):
        dominated = np.all(arr >= v, axis=1) & np.any(arr > v, axis=1)
        if not dominated.any():
            keep.append(i)
    return arr[keep]


def _maximal_power(H: ExponentSet, i: int) -> np.ndarray:
    # maximal elements of a sumset are sums of maximal elements
    tops = _maximal(H.members)
    out = np.zeros((1, H.m), dtype=np.int64)
    for _ in range(i):
        sums = (out[:, None, :] + tops[None, :, :]).reshape(-1, H.m)
        out = _maximal(map(tuple, sums))
    return out


def reduced_power(H: ExponentSet, i: int) -> frozenset:
    """Reduced images of all sums of ``i`` members of ``H``.

    Reduction is compatible with addition, so the power is built one summand
    at a time and never leaves the box.
    """
    out = frozenset([(0,) * H.m])
    for _ in range(i):
        out = frozenset(
            reduce_exponent(tuple(a + b for a, b in zip(u, v)), H.q) for u in out for v in H.members
        )
    return out


@lru_cache(maxsize=4096)
def l_set(q: int, m: int, d: int, r: int, i: int, mode: str = "strict") -> ExponentSet:
    """Exponents ``a`` whose translate ``a + iH`` lies in ``Hyp_q(r+1, m)``.

    ``strict`` requires every sum to stay in the box ``[0, q-1]^m``;
    ``reduced`` instead reduces each sum under ``X^q = X`` first, which
    admits a (still sound) superset.
    """
    if r < 1 or i < 0:
        raise ValueError("need r >= 1 and i >= 0")
    if mode not in ("strict", "reduced"):
        raise ValueError(f"unknown mode {mode!r}")
    H = build_hyp_set(q, m, d)
    Hr = build_hyp_set(q, m, r + 1)
    if i == 0:
        return ExponentSet(q, m, Hr.members, f"L({d},{r},0)")
    if not H.members:
        # empty H: the condition is vacuous
        return ExponentSet(q, m, box_set(q, m).members, f"L({d},{r},{i})")
    box = np.array(list(_box(q, m)), dtype=np.int64)
    if mode == "strict":
        # both the box and H_r are down-closed, so maximal sums suffice
        tops = _maximal_power(H, i)
        ok = np.ones(len(box), dtype=bool)
        for h in tops:
            s = box + h
            inside = np.all(s <= q - 1, axis=1)
            fp = np.prod(np.where(inside[:, None], q - np.minimum(s, q - 1), 0), axis=1)
            ok &= inside & (fp >= r + 1)
    else:
        hs = np.array(sorted(reduced_power(H, i)), dtype=np.int64)
        ok = np.ones(len(box), dtype=bool)
        for h in hs:
            s = box + h
            red = np.where(s <= q - 1, s, (s - 1) % (q - 1) + 1)
            ok &= np.prod(q - red, axis=1) >= r + 1
    members = frozenset(tuple(int(c) for c in v) for v in box[ok])
    return ExponentSet(q, m, members, f"L({d},{r},{i})")


def l_set_closed_form_m2(q: int, d: int, r: int, i: int) -> ExponentSet:
    """Two-variable closed form: the square ``[0, q-1-i*a]^2`` with
    ``a = floor(q - d/q)``, valid for ``d > q`` and ``1 <= r < a - b + 1``
    where ``b = q - d/(q - a)``."""
    if d <= q:
        raise ValueError("closed form needs d > q")
    if i < 1:
        raise ValueError("closed form needs i >= 1")
    a = math.floor(Fraction(q) - Fraction(d, q))
    b = q - Fraction(d, q - a)
    if not 1 <= r < a - b + 1:
        raise ValueError(f"closed form needs 1 <= r < a-b+1 = {a - b + 1}")
    side = q - 1 - i * a
    members = frozenset(_box(side + 1, 2)) if side >= 0 else frozenset()
    return ExponentSet(q, 2, members, f"CUBE({side})")


def shortcut_parameters_m2(q: int, d: int) -> tuple[int, Fraction]:
    """``(a, b)`` of the two-variable closed forms."""
    a = math.floor(Fraction(q) - Fraction(d, q))
    return a, q - Fraction(d, q - a)


def sum_code_distance_bound(q: int, m: int, d_a: int, d_b: int) -> int:
    """Distance bound ``d_a + d_b - q^m`` for the code of ``A + B``
    (``1`` when vacuous)."""
    bound = d_a + d_b - q**m
    return bound if bound > 0 else 1


def sumset(A: ExponentSet, B: ExponentSet, reduce: bool = True) -> frozenset:
    out = {tuple(x + y for x, y in zip(u, v)) for u in A.members for v in B.members}
    if reduce:
        out = {reduce_exponent(v, A.q) for v in out}
    return frozenset(out)
