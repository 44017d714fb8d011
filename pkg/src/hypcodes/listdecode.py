"""Interpolation-based list decoding of hyperbolic codes.

For a radius ``r`` we look for ``Q(Y) = sum_i Q_i Y^i`` with ``Q_i``
supported on ``L(d, r, i)`` such that ``sum_i ev(Q_i) * y^{*i} = 0``.  Every
codeword ``ev(f)`` within distance ``r`` of ``y`` then satisfies
``Q(f) = 0``, so the list is read off from the roots of ``Q`` in ``Y``.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import numpy as np

from . import linalg, poly
from .codes import (
    all_points,
    cached_code,
    hamming,
    monomial_rows,
    schur_power,
)
from .field import FieldSpec
from .lattice import ExponentSet, build_hyp_set, l_set, shortcut_parameters_m2

log = logging.getLogger(__name__)

MODES = ("strict", "reduced")


@dataclass(frozen=True)
class ListPlan:
    q: int
    m: int
    d: int
    r: int
    t: int
    mode: str
    levels: tuple  # ExponentSets L(d, r, 0..t)

    @property
    def n(self) -> int:
        return self.q**self.m

    @property
    def unknowns(self) -> int:
        return sum(len(L) for L in self.levels)

    @property
    def sizes(self) -> list[int]:
        return [len(L) for L in self.levels]


def plan(q: int, m: int, d: int, r: int, mode: str = "strict") -> ListPlan | None:
    """Smallest ``t`` whose levels give more unknowns than equations, or
    ``None`` when the levels run out first."""
    if r < 1:
        raise ValueError("radius must be at least 1")
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    n = q**m
    if r + 1 > n:
        return None
    H = build_hyp_set(q, m, d)
    if H.members == {(0,) * m}:
        # iH = {0} for every i, so all levels coincide with H_r
        L0 = l_set(q, m, d, r, 0, mode)
        t = n // len(L0)
        levels = (L0,) + tuple(ExponentSet(q, m, L0.members, f"L({d},{r},{i})") for i in range(1, t + 1))
        return ListPlan(q, m, d, r, t, mode, levels)
    levels, total, i = [], 0, 0
    while True:
        L = l_set(q, m, d, r, i, mode)
        if not L.members:
            return None
        levels.append(L)
        total += len(L)
        if total > n:
            return ListPlan(q, m, d, r, i, mode, tuple(levels))
        i += 1


@dataclass(frozen=True)
class RadiusReport:
    r_star: int  # largest radius with a feasible plan, 0 if none
    t: int | None  # list size bound at r_star
    shortcut_bound: Fraction | None = None  # a - b + 1 (m = 2, d > q)
    shortcut_t: int | None = None  # floor((q-1)/a)
    shortcut_radius: int | None = None  # largest r < a - b + 1 passing the size test


def _shortcut(q: int, d: int):
    """Two-variable shortcut: for ``r < a - b + 1`` the levels are
    ``Hyp(r+1)`` followed by cubes of side ``q - i a``."""
    a, b = shortcut_parameters_m2(q, d)
    if a <= 0:
        return None, None, None
    bound, t = a - b + 1, (q - 1) // a
    cubes = sum(max(0, q - i * a) ** 2 for i in range(1, t + 1))
    radius = None
    for r in range(1, q * q):
        if r >= bound or len(build_hyp_set(q, 2, r + 1)) + cubes <= q * q:
            break
        radius = r
    return bound, t, radius


def max_radius(q: int, m: int, d: int, mode: str = "strict") -> RadiusReport:
    n = q**m
    lo, hi = 0, n - 1  # feasibility is monotone in r since H_r shrinks
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if plan(q, m, d, mid, mode) is not None:
            lo = mid
        else:
            hi = mid - 1
    p = plan(q, m, d, lo, mode) if lo >= 1 else None
    extra = _shortcut(q, d) if m == 2 and d > q else (None, None, None)
    return RadiusReport(lo, p.t if p else None, *extra)


def unique_radius_via_welch(q: int, m: int, d: int, safe: bool = False) -> int:
    """Largest ``r`` with ``|Hyp(r+1)| + |Hyp(q^m + r - d)| > q^m``: the
    radius reachable with a degree-one ``Q``.

    The second set is not always inside ``L(d, r, 1)`` (e.g. ``d = q^m``,
    where it is ``Hyp(r)``), so a few inputs need ``t = 2`` at the returned
    radius.  ``safe=True`` uses ``Hyp(q^m + r + 1 - d)`` instead, which the
    sumset distance bound places inside ``L(d, r, 1)``, so ``t <= 1`` holds.
    """
    n = q**m
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= {n}")
    shift = 1 if safe else 0
    best = 0
    for r in range(1, n):
        if len(build_hyp_set(q, m, r + 1)) + len(build_hyp_set(q, m, max(1, n + r + shift - d))) > n:
            best = r
        else:
            break
    return best


# -- interpolation ---------------------------------------------------------------------


@dataclass
class YPolynomial:
    """``Q(Y) = sum_i coeffs[i] Y^i`` with multivariate coefficients."""

    coeffs: list  # of sparse polynomials
    m: int

    @property
    def degree(self) -> int:
        nz = [i for i, c in enumerate(self.coeffs) if c]
        return nz[-1] if nz else -1

    def is_zero(self) -> bool:
        return self.degree < 0

    def bivariate(self) -> dict:
        """As one sparse polynomial with key ``(j, e_1, ..., e_m)``."""
        return {(j,) + e: c for j, Qj in enumerate(self.coeffs) for e, c in Qj.items()}

    def substitute(self, F: FieldSpec, f: dict) -> dict:
        """``Q(f)`` in the polynomial ring (no reduction)."""
        out, fj = {}, poly.constant(1, self.m)
        for i, Qi in enumerate(self.coeffs):
            if i:
                fj = poly.mul(F, fj, f)
            if Qi:
                out = poly.add(F, out, poly.mul(F, Qi, fj))
        return out

    def residual(self, F: FieldSpec, y) -> np.ndarray:
        """``sum_i ev(Q_i) * y^{*i}``; zero for an interpolating ``Q``."""
        q = F.q
        pts = all_points(q, self.m)
        out = np.zeros(len(pts), dtype=np.int64)
        for i, Qi in enumerate(self.coeffs):
            if Qi:
                exps = list(Qi)
                ev = F.dot(np.array([Qi[e] for e in exps]), monomial_rows(F, exps, pts))
                out = F.add(out, F.mul(ev, schur_power(F, y, i)))
        return out

    def pointwise(self, F: FieldSpec) -> np.ndarray:
        """``(t+1) x n`` evaluations of the reduced coefficients."""
        pts = all_points(F.q, self.m)
        rows = np.zeros((len(self.coeffs), len(pts)), dtype=np.int64)
        for i, Qi in enumerate(self.coeffs):
            red = poly.reduce(F, Qi)
            if red:
                exps = list(red)
                rows[i] = F.dot(np.array([red[e] for e in exps]), monomial_rows(F, exps, pts))
        return rows


def interpolation_matrix(F: FieldSpec, p: ListPlan, y) -> np.ndarray:
    """``n x unknowns``; column ``(i, a)`` is ``ev(X^a) * y^{*i}``, level-major,
    exponents lexicographic within a level."""
    pts = all_points(p.q, p.m)
    y = np.asarray(y, dtype=np.int64)
    blocks = []
    for i, L in enumerate(p.levels):
        if len(L):
            blocks.append(F.mul(monomial_rows(F, L.sorted, pts), schur_power(F, y, i)[None, :]))
    return np.concatenate(blocks, axis=0).T


def interpolate(F: FieldSpec, p: ListPlan, y) -> YPolynomial:
    y = np.asarray(y, dtype=np.int64)
    if y.shape != (p.n,):
        raise ValueError(f"received word must have length {p.n}")
    x = linalg.first_kernel_vector(F, interpolation_matrix(F, p, y))
    if x is None:  # impossible: more unknowns than equations
        raise AssertionError("interpolation system has a trivial kernel")
    coeffs, pos = [], 0
    for L in p.levels:
        block = x[pos : pos + len(L)]
        coeffs.append({e: int(c) for e, c in zip(L.sorted, block) if c})
        pos += len(L)
    return YPolynomial(coeffs, p.m)


# -- roots ------------------------------------------------------------------------------


def _univariate_roots(F: FieldSpec, Q: dict) -> list[int]:
    """Roots in F_q of ``sum Q[(j,)] Y^j``."""
    degs = [k[0] for k in Q]
    coeffs = np.zeros(max(degs) + 1, dtype=np.int64)
    for k, c in Q.items():
        coeffs[k[0]] = c
    xs = np.arange(F.q)
    vals = np.zeros(F.q, dtype=np.int64)
    for c in coeffs[::-1]:
        vals = F.add(F.mul(vals, xs), int(c))
    return [int(v) for v in xs[vals == 0]]


def _shift_substitute(F: FieldSpec, Q: dict, g: dict, m: int) -> dict:
    """``Q(X, X_m Y + g)`` for ``Q`` keyed ``(j, e_1..e_m)`` and ``g`` in the
    first ``m-1`` variables."""
    S = poly.Scalars(F)
    p = F.p
    jmax = max(k[0] for k in Q)
    gpow = [poly.constant(1, m - 1)]
    for _ in range(jmax):
        gpow.append(poly.mul(F, gpow[-1], g))
    out: dict = {}
    for k, c in Q.items():
        j, a = k[0], k[1:]
        for l in range(j + 1):
            b = comb(j, l) % p  # prime-field elements are indexed by value
            if not b:
                continue
            cb = S.mul(c, b)
            for e, cg in gpow[j - l].items():
                key = (l,) + tuple(x + y for x, y in zip(a[:-1], e)) + (a[-1] + l,)
                poly._acc(S, out, key, S.mul(cb, cg))
    return out


def _assemble(prefix: list, m: int) -> dict:
    f = {}
    for deg, g in enumerate(prefix):
        for e, c in g.items():
            f[e + (deg,)] = c
    return f


def _rr(F: FieldSpec, Q: dict, m: int, bounds: tuple) -> list[dict]:
    """All polynomial roots of bounded degree of a nonzero ``Q`` in
    ``F_q[X_1..X_m][Y]``, recursing on the last variable."""
    if m == 0:
        return [poly.constant(a, 0) for a in _univariate_roots(F, Q)]
    found: dict = {}

    def step(Qc: dict, prefix: list):
        shift = min(k[-1] for k in Qc)
        if shift:
            Qc = {k[:-1] + (k[-1] - shift,): c for k, c in Qc.items()}
        if not any(k[0] == 0 for k in Qc):  # Y divides Qc: prefix is a root
            f = _assemble(prefix, m)
            found[tuple(sorted(f.items()))] = f
        if len(prefix) == bounds[-1] + 1:
            return
        Q0 = {k[:-1]: c for k, c in Qc.items() if k[-1] == 0}
        for g in _rr(F, Q0, m - 1, bounds[:-1]):
            step(_shift_substitute(F, Qc, g, m), prefix + [g])

    step(Q, [])
    return list(found.values())


def roots_polynomial(F: FieldSpec, Q: YPolynomial, bounds=None) -> list[dict]:
    """Every ``f`` (per-variable degree within ``bounds``, default ``q-1``)
    with ``Y - f`` dividing ``Q``; each one checked by substitution."""
    if Q.is_zero():
        raise ValueError("Q must be nonzero")
    bounds = (F.q - 1,) * Q.m if bounds is None else tuple(bounds)
    out = []
    for f in _rr(F, Q.bivariate(), Q.m, bounds):
        if not Q.substitute(F, f):
            out.append(f)
    return sorted(out, key=lambda f: sorted(f.items()))


def roots_pointwise(F: FieldSpec, Q: YPolynomial, H: ExponentSet) -> list[dict]:
    """Every ``f`` supported on ``H`` with ``ev(Q(f)) = 0``, i.e. ``Q(f) = 0``
    after reduction.  Branches on the allowed values of ``f`` point by point
    while tracking the affine space of coefficient vectors."""
    if Q.is_zero():
        raise ValueError("Q must be nonzero")
    code = cached_code(F, H)
    G = code.generator  # k x n
    q, n, k = F.q, code.n, code.k
    P = Q.pointwise(F)
    vals = np.zeros((n, q), dtype=np.int64)
    xs = np.arange(q)
    for i in range(P.shape[0] - 1, -1, -1):
        vals = F.add(F.mul(vals, xs[None, :]), P[i][:, None])
    allowed = vals == 0  # n x q
    counts = allowed.sum(axis=1)
    if (counts == 0).any():
        return []
    constrained = np.flatnonzero(counts < q)
    out = []

    def ok(x) -> bool:
        w = F.dot(x, G[:, constrained])
        return bool(allowed[constrained, w].all())

    def search(x0: np.ndarray, N: np.ndarray):
        if len(N) == 0:
            if ok(x0):
                out.append(x0)
            return
        if q ** len(N) <= 4096:
            Z = np.array(list(itertools.product(range(q), repeat=len(N))), dtype=np.int64)
            X = F.add(F.dot(Z, N), x0[None, :])
            W = F.dot(X, G[:, constrained])
            good = allowed[constrained[None, :], W].all(axis=1)
            out.extend(X[good])
            return
        base = F.dot(x0, G[:, constrained])
        Wn = F.dot(N, G[:, constrained])
        fixed = ~Wn.any(axis=0)
        if not allowed[constrained[fixed], base[fixed]].all():
            return
        free = np.flatnonzero(~fixed)
        j = free[np.argmin(counts[constrained[free]])]
        w = Wn[:, j]
        piv = int(np.flatnonzero(w)[0])
        winv = F.inv(int(w[piv]))
        # z . w = v - base  ->  z_piv = (v - base - sum_{i != piv} w_i z_i) / w_piv
        rest = [i for i in range(len(N)) if i != piv]
        ratio = F.mul(w[rest], winv)
        N2 = F.sub(N[rest], F.mul(ratio[:, None], N[piv][None, :])) if rest else N[:0]
        for v in np.flatnonzero(allowed[constrained[j]]):
            shift = F.mul(F.sub(int(v), int(base[j])), winv)
            search(F.add(x0, F.mul(shift, N[piv])), N2)

    search(np.zeros(k, dtype=np.int64), np.eye(k, dtype=np.int64))
    roots = [code.message_dict(x) for x in out]
    for f in roots:  # verification by substitution
        assert not poly.reduce(F, Q.substitute(F, f)), "pointwise root fails substitution"
    return sorted(roots, key=lambda f: sorted(f.items()))


def roots_in_Y(F: FieldSpec, Q: YPolynomial, H: ExponentSet, mode: str = "strict") -> list[dict]:
    """Candidate messages: polynomial roots in strict mode, roots after
    reduction restricted to ``H`` in reduced mode."""
    if mode == "strict":
        return roots_polynomial(F, Q)
    if mode == "reduced":
        return roots_pointwise(F, Q, H)
    raise ValueError(f"unknown mode {mode!r}")


# -- the decoder ----------------------------------------------------------------------


@dataclass
class ListEntry:
    codeword: np.ndarray
    distance: int
    message: dict


@dataclass
class ListDecodeResult:
    plan: ListPlan
    Q: YPolynomial
    roots: list
    entries: list = field(default_factory=list)


def list_decode_full(F: FieldSpec, m: int, d: int, y, r: int, mode: str = "strict") -> ListDecodeResult:
    q = F.q
    p = plan(q, m, d, r, mode)
    if p is None:
        raise ValueError(f"radius {r} is infeasible for Hyp_{q}({d},{m}) in {mode} mode")
    y = np.asarray(y, dtype=np.int64)
    Q = interpolate(F, p, y)
    H = build_hyp_set(q, m, d)
    roots = roots_in_Y(F, Q, H, mode)
    code = cached_code(F, H)
    entries = []
    for f in roots:
        if any(e not in H for e in f):
            continue
        c = code.encode_vector(code.message_vector(f))
        dist = hamming(c, y)
        if dist <= r:
            entries.append(ListEntry(c, dist, f))
    entries.sort(key=lambda e: (e.distance, sorted(e.message.items())))
    return ListDecodeResult(p, Q, roots, entries)


def list_decode(F: FieldSpec, m: int, d: int, y, r: int, mode: str = "strict") -> list[tuple[np.ndarray, int]]:
    """All codewords of ``Hyp_q(d, m)`` within distance ``r`` of ``y``."""
    return [(e.codeword, e.distance) for e in list_decode_full(F, m, d, y, r, mode).entries]
