"""Gaussian elimination over a :class:`~hypcodes.field.FieldSpec`."""

from __future__ import annotations

import numpy as np

from .field import FieldSpec


def rref(F: FieldSpec, M, ncols: int | None = None) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form.

    Pivots are searched column by column in natural order, taking the first
    row (at or below the current one) with a nonzero entry.  Only the first
    ``ncols`` columns are eligible as pivots; row operations act on every
    column, which makes augmented systems work.
    """
    R = np.array(M, dtype=np.int64, copy=True)
    if R.ndim != 2:
        raise ValueError("rref needs a 2-d array")
    nrows, total = R.shape
    ncols = total if ncols is None else ncols
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        nz = np.flatnonzero(R[row:, col])
        if nz.size == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            R[[row, piv]] = R[[piv, row]]
        lead = int(R[row, col])
        if lead != 1:
            R[row, col:] = F.mul(F.inv(lead), R[row, col:])
        factors = R[:, col].copy()
        factors[row] = 0
        others = np.flatnonzero(factors)
        if others.size:
            R[np.ix_(others, np.arange(col, total))] = F.sub(
                R[others, col:], F.mul(factors[others, None], R[row, col:][None, :])
            )
        pivots.append(col)
        row += 1
    return R, pivots


def rank(F: FieldSpec, M) -> int:
    return len(rref(F, M)[1])


def nullspace(F: FieldSpec, M) -> np.ndarray:
    """Basis of ``{x : M x = 0}``, one vector per row (free variables set to
    unit vectors, in increasing column order)."""
    M = np.asarray(M, dtype=np.int64)
    ncols = M.shape[1]
    R, pivots = rref(F, M)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for b, fc in enumerate(free):
        basis[b, fc] = 1
        for r, pc in enumerate(pivots):
            basis[b, pc] = F.neg(int(R[r, fc]))
    return basis


def first_kernel_vector(F: FieldSpec, M) -> np.ndarray | None:
    """Kernel vector with the first free variable 1 and the others 0."""
    M = np.asarray(M, dtype=np.int64)
    ncols = M.shape[1]
    R, pivots = rref(F, M)
    pset = set(pivots)
    free = next((c for c in range(ncols) if c not in pset), None)
    if free is None:
        return None
    x = np.zeros(ncols, dtype=np.int64)
    x[free] = 1
    for r, pc in enumerate(pivots):
        x[pc] = F.neg(int(R[r, free]))
    return x


def solve(F: FieldSpec, A, b) -> np.ndarray | None:
    """Some solution ``x`` of ``A x = b`` (free variables zero), or ``None``."""
    A = np.asarray(A, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    aug = np.concatenate([A, b.reshape(-1, 1)], axis=1)
    R, pivots = rref(F, aug, ncols=A.shape[1])
    rnk = len(pivots)
    if np.any(R[rnk:, -1]):
        return None
    x = np.zeros(A.shape[1], dtype=np.int64)
    for r, pc in enumerate(pivots):
        x[pc] = R[r, -1]
    return x


def inverse(F: FieldSpec, A) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("inverse needs a square matrix")
    R, pivots = rref(F, np.concatenate([A, np.eye(n, dtype=np.int64)], axis=1), ncols=n)
    if len(pivots) < n:
        raise ZeroDivisionError("singular matrix")
    return R[:, n:]
