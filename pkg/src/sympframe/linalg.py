"""Dense linear algebra over GF(q) on index arrays (small matrices only)."""

from __future__ import annotations

import itertools

import numpy as np

from .ff import FieldSpec


def rref(f: FieldSpec, rows) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form; returns (nonzero rows, pivot columns)."""
    if isinstance(rows, np.ndarray) and rows.ndim == 2:
        A = rows.astype(np.int64, copy=True)
    elif len(rows):
        A = np.array(rows, dtype=np.int64).reshape(len(rows), -1)
    else:
        A = np.zeros((0, 0), np.int64)
    m, ncols = A.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = f.mul_table[f.inv(int(A[r, c])), A[r]]
        for i in range(m):
            if i != r and A[i, c] != 0:
                A[i] = f.add_table[A[i], f.mul_table[f.neg(int(A[i, c])), A[r]]]
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(f: FieldSpec, rows) -> int:
    if len(rows) == 0:
        return 0
    return len(rref(f, rows)[1])


def nullspace(f: FieldSpec, rows, ncols: int) -> np.ndarray:
    """Basis (as rows) of {v : rows @ v = 0}."""
    if len(rows) == 0:
        return np.eye(ncols, dtype=np.int64)
    R, pivots = rref(f, rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = np.zeros(ncols, dtype=np.int64)
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = f.neg(int(R[i, fc]))
        basis.append(v)
    return np.array(basis, dtype=np.int64).reshape(len(basis), ncols)


def axpy(f: FieldSpec, a: int, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """a*x + y, elementwise over index arrays."""
    return f.add_table[f.mul_table[a, x], y]


def scale(f: FieldSpec, a: int, x: np.ndarray) -> np.ndarray:
    return f.mul_table[a, x]


def vsum(f: FieldSpec, X: np.ndarray, axis: int = -1) -> np.ndarray:
    """Field sum along an axis of an index array."""
    X = np.moveaxis(np.asarray(X), axis, 0)
    acc = X[0]
    for row in X[1:]:
        acc = f.add_table[acc, row]
    return acc


def enumerate_rref(f: FieldSpec, ncols: int, k: int) -> np.ndarray:
    """All k x ncols matrices in reduced row-echelon form of rank k, shape (M, k, ncols).

    One per k-dimensional subspace of GF(q)^ncols.
    """
    q = f.q
    out = []
    for piv in itertools.combinations(range(ncols), k):
        free = [(i, c) for i in range(k) for c in range(piv[i] + 1, ncols) if c not in piv]
        count = q ** len(free)
        block = np.zeros((count, k, ncols), dtype=np.int64)
        for i, c in enumerate(piv):
            block[:, i, c] = 1
        idx = np.arange(count, dtype=np.int64)
        for i, c in reversed(free):
            block[:, i, c] = idx % q
            idx //= q
        out.append(block)
    if not out:
        return np.zeros((0, k, ncols), dtype=np.int64)
    return np.concatenate(out)
