"""Ranks of sparse boundary matrices over GF(p) or Q by column reduction.

Columns are reduced left to right against stored pivot columns keyed by
their lowest (largest-index) nonzero row.  When a chain complex is reduced
from the top dimension down, every pivot row of d_{k+1} names a column of
d_k that is known to reduce to zero and is skipped ("clearing").
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np
import scipy.sparse as sps


def _columns(M: sps.spmatrix):
    M = sps.csc_matrix(M)
    M.sort_indices()
    ip, ix, data = M.indptr, M.indices, M.data
    for j in range(M.shape[1]):
        yield j, ix[ip[j]:ip[j + 1]], data[ip[j]:ip[j + 1]]


def reduce_columns(M: sps.spmatrix, p: int | None, skip=()) -> tuple[int, list[int]]:
    """(rank, pivot rows) of M over GF(p), or over Q when p is None.

    Columns listed in `skip` are assumed to reduce to zero.
    """
    skip = set(int(s) for s in skip)
    pivots: dict[int, dict] = {}
    exact = p is None
    for j, rows, vals in _columns(M):
        if j in skip or len(rows) == 0:
            continue
        if exact:
            col = {int(r): Fraction(int(v)) for r, v in zip(rows, vals) if v != 0}
        else:
            col = {int(r): int(v) % p for r, v in zip(rows, vals)}
            col = {r: v for r, v in col.items() if v}
        while col:
            low = max(col)
            other = pivots.get(low)
            if other is None:
                c = col[low]
                if exact:
                    pivots[low] = {r: v / c for r, v in col.items()}
                else:
                    inv = pow(c, p - 2, p)
                    pivots[low] = {r: v * inv % p for r, v in col.items()}
                break
            fct = col[low]
            for r, v in other.items():
                if exact:
                    nv = col.get(r, 0) - fct * v
                else:
                    nv = (col.get(r, 0) - fct * v) % p
                if nv:
                    col[r] = nv
                else:
                    col.pop(r, None)
    return len(pivots), sorted(pivots)


def complex_ranks(boundaries: list[sps.spmatrix], p: int | None, clearing: bool = True) -> list[int]:
    """Ranks of d_1..d_K (boundaries[k-1] = d_k), reduced from the top down."""
    ranks = [0] * len(boundaries)
    skip: list[int] = []
    for k in range(len(boundaries), 0, -1):
        r, piv = reduce_columns(boundaries[k - 1], p, skip if clearing else ())
        ranks[k - 1] = r
        skip = piv
    return ranks


def rank_mod_p(M: sps.spmatrix, p: int) -> int:
    return reduce_columns(M, p)[0]


def rank_exact(M: sps.spmatrix) -> int:
    return reduce_columns(M, None)[0]


def dense_rank_mod_p(M: np.ndarray, p: int) -> int:
    """Plain Gaussian elimination (reference for tests)."""
    A = np.array(M, dtype=object) % p
    m, ncols = A.shape
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, m) if A[i, c] % p), None)
        if piv is None:
            continue
        A[[r, piv]] = A[[piv, r]]
        A[r] = A[r] * pow(int(A[r, c]), p - 2, p) % p
        for i in range(m):
            if i != r and A[i, c] % p:
                A[i] = (A[i] - A[i, c] * A[r]) % p
        r += 1
        if r == m:
            break
    return r
