"""Non-degenerate 2-dimensional subspaces ("planes") and the six-case pair classification.

For planes S, W the class of W relative to S is
    1  S = W
    2  dim(S+W) = 3
    3  dim(S+W) = 4, S+W degenerate
    4  S ⊥ W
    5  S+W non-degenerate, S not ⊥ W, w ∘_S u = 0
    6  otherwise (dim 4, non-degenerate, w ∘_S u != 0)

Three routes compute it: `classify` (subspace arithmetic, one pair at a time),
`classify_pairs` (projection calculus, vectorised over pair lists) and
`class_matrix` (all pairs at once, using point incidences and the pairing
matrix psi(s_i, w_j)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from . import linalg
from .symp import (
    Subspace,
    SympSpace,
    circ,
    psi,
    psi_rows,
    radical_dim,
    span,
    subspace_sum,
)


@dataclass(frozen=True)
class Plane:
    rows: tuple[tuple[int, ...], tuple[int, ...]]
    sbasis: tuple[tuple[int, ...], tuple[int, ...]] = field(compare=False)
    id: int = field(default=-1, compare=False)

    @property
    def subspace(self) -> Subspace:
        return Subspace(self.rows, len(self.rows[0]))

    @property
    def w(self) -> np.ndarray:
        return np.array(self.sbasis[0], dtype=np.int64)

    @property
    def u(self) -> np.ndarray:
        return np.array(self.sbasis[1], dtype=np.int64)


@dataclass(frozen=True)
class CaseCensus:
    counts: tuple[int, int, int, int, int, int]

    @property
    def total(self) -> int:
        return sum(self.counts)

    def as_dict(self) -> dict[int, int]:
        return {i + 1: c for i, c in enumerate(self.counts)}


def _sbasis(sp: SympSpace, rows: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    f = sp.field
    s = psi(sp, rows[0], rows[1])
    return rows[0].copy(), f.mul_table[f.inv(s), rows[1]]


def canonical_plane(sp: SympSpace, v1, v2, planes: PlaneSet | None = None) -> Plane:
    S = span(sp, [v1, v2])
    if S.dim != 2:
        raise ValueError("vectors are linearly dependent")
    if psi(sp, v1, v2) == 0:
        raise ValueError("plane is degenerate: psi(v1, v2) = 0")
    rows = S.matrix()
    w, u = _sbasis(sp, rows)
    pid = planes.index_of(rows) if planes is not None else -1
    return Plane(S.rows, (tuple(int(t) for t in w), tuple(int(t) for t in u)), pid)


class PlaneSet(Sequence):
    """All planes of a space, as packed arrays, indexed by dense ids.

    rows[i] is the 2 x dim RREF basis of plane i; (w[i], u[i]) its cached
    symplectic basis.  Ids follow the sort order of the base-q row encodings.
    """

    def __init__(self, sp: SympSpace, rows: np.ndarray):
        self.space = sp
        q = sp.q
        weights = np.array([q ** (sp.dim - 1 - i) for i in range(sp.dim)], dtype=object)
        codes = [(int(np.dot(r[0].astype(object), weights)), int(np.dot(r[1].astype(object), weights))) for r in rows]
        order = sorted(range(len(codes)), key=codes.__getitem__)
        self.rows = rows[order]
        self.codes = [codes[i] for i in order]
        self._index = {c: i for i, c in enumerate(self.codes)}
        f = sp.field
        s = psi_rows(sp, self.rows[:, 0], self.rows[:, 1])
        self.w = self.rows[:, 0].copy()
        self.u = f.mul_table[f.inv_table[s][:, None], self.rows[:, 1]]
        self._points = None

    def __len__(self) -> int:
        return len(self.rows)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return [self[j] for j in range(*i.indices(len(self)))]
        r = self.rows[i]
        return Plane(
            (tuple(int(t) for t in r[0]), tuple(int(t) for t in r[1])),
            (tuple(int(t) for t in self.w[i]), tuple(int(t) for t in self.u[i])),
            int(i),
        )

    def __iter__(self) -> Iterator[Plane]:
        for i in range(len(self)):
            yield self[i]

    def index_of(self, rows) -> int:
        q = self.space.q
        from .symp import encode_row

        key = (encode_row(q, rows[0]), encode_row(q, rows[1]))
        return self._index[key]

    def find(self, v1, v2) -> int:
        return canonical_plane(self.space, v1, v2, self).id

    def point_incidence(self) -> tuple[np.ndarray, int]:
        """(N, q+1) array of projective point ids lying on each plane, and the point count."""
        if self._points is None:
            sp, f, q = self.space, self.space.field, self.space.q
            combos = [self.u] + [f.add_table[self.w, f.mul_table[b, self.u]] for b in range(q)]
            pts = np.stack(combos, axis=1)  # (N, q+1, dim)
            lead = np.argmax(pts != 0, axis=2)
            lv = np.take_along_axis(pts, lead[..., None], axis=2)[..., 0]
            pts = f.mul_table[f.inv_table[lv][..., None], pts]
            weights = np.array([q ** (sp.dim - 1 - i) for i in range(sp.dim)], dtype=np.int64)
            codes = pts @ weights
            uniq, inv = np.unique(codes, return_inverse=True)
            self._points = (inv.reshape(codes.shape), len(uniq))
        return self._points


def enumerate_planes(sp: SympSpace) -> PlaneSet:
    R = linalg.enumerate_rref(sp.field, sp.dim, 2)
    keep = psi_rows(sp, R[:, 0], R[:, 1]) != 0
    return PlaneSet(sp, R[keep])


def enumerate_planes_by_pairs(sp: SympSpace) -> list[tuple[tuple[int, ...], ...]]:
    """Reference enumeration: projective w, all u with psi(w,u) != 0, canonicalize and dedupe.

    Slow; used to cross-check `enumerate_planes` on small spaces.
    """
    f = sp.field
    all_vecs = linalg.enumerate_rref(f, sp.dim, 1)[:, 0]
    import itertools

    seen = set()
    every = np.array(list(itertools.product(range(sp.q), repeat=sp.dim)), dtype=np.int64)
    for w in all_vecs:
        vals = psi_rows(sp, np.broadcast_to(w, every.shape), every)
        for u in every[vals != 0]:
            seen.add(span(sp, [w, u]).rows)
    return sorted(seen)


# -- classification -----------------------------------------------------------

def classify(sp: SympSpace, S: Plane, W: Plane) -> int:
    """Class of W relative to S, straight from the definitions (subspace arithmetic)."""
    if sp.r != 0:
        raise ValueError("pair classification is defined for non-degenerate spaces only")
    if S.rows == W.rows:
        return 1
    total = subspace_sum(sp, S.subspace, W.subspace)
    if total.dim == 3:
        return 2
    if radical_dim(sp, total) > 0:
        return 3
    if all(psi(sp, np.array(s), np.array(w)) == 0 for s in S.rows for w in W.rows):
        return 4
    return 5 if circ(sp, S, W.w, W.u) == 0 else 6


def pairings(planes: PlaneSet, s_ids, w_ids):
    """(a, b, c, d) = (psi(w,x), psi(w,y), psi(u,x), psi(u,y)) for S=<x,y>, W=<w,u>, elementwise."""
    sp = planes.space
    x, y = planes.w[s_ids], planes.u[s_ids]
    w, u = planes.w[w_ids], planes.u[w_ids]
    return psi_rows(sp, w, x), psi_rows(sp, w, y), psi_rows(sp, u, x), psi_rows(sp, u, y)


def _decide(f, same, dim3, a, b, c, d):
    circ_v = f.add_table[f.mul_table[a, d], f.neg_table[f.mul_table[b, c]]]
    ortho = (a == 0) & (b == 0) & (c == 0) & (d == 0)
    out = np.full(np.shape(a), 6, dtype=np.int8)
    out[circ_v == 0] = 5
    out[ortho] = 4
    out[circ_v == 1] = 3
    out[dim3] = 2
    out[same] = 1
    return out


def classify_pairs(planes: PlaneSet, s_ids, w_ids) -> np.ndarray:
    """Vectorised classification of W = planes[w_ids] relative to S = planes[s_ids]."""
    sp = planes.space
    if sp.r != 0:
        raise ValueError("pair classification is defined for non-degenerate spaces only")
    f = sp.field
    s_ids = np.asarray(s_ids)
    w_ids = np.asarray(w_ids)
    s_ids, w_ids = np.broadcast_arrays(s_ids, w_ids)
    a, b, c, d = pairings(planes, s_ids, w_ids)
    x, y = planes.w[s_ids], planes.u[s_ids]
    w, u = planes.w[w_ids], planes.u[w_ids]
    # w_S = w - w_x x - w_y y with w_x = psi(w,y) = b, w_y = -psi(w,x) = -a
    wS = f.add_table[w, f.add_table[f.mul_table[f.neg_table[b][..., None], x], f.mul_table[a[..., None], y]]]
    uS = f.add_table[u, f.add_table[f.mul_table[f.neg_table[d][..., None], x], f.mul_table[c[..., None], y]]]
    wz = ~wS.any(-1)
    uz = ~uS.any(-1)
    same = wz & uz
    lead = np.argmax(wS != 0, axis=-1)
    wl = np.take_along_axis(wS, lead[..., None], axis=-1)[..., 0]
    ul = np.take_along_axis(uS, lead[..., None], axis=-1)[..., 0]
    lam = f.mul_table[ul, f.inv_table[wl]]
    prop = (f.mul_table[lam[..., None], wS] == uS).all(-1)
    rank1 = ~same & (wz | uz | prop)
    return _decide(f, same, rank1, a, b, c, d)


def class_row_blocks(planes: PlaneSet, block: int = 512):
    """Yield (start, classes) with classes[i, j] = class of planes[j] relative to planes[start+i]."""
    sp = planes.space
    if sp.r != 0:
        raise ValueError("pair classification is defined for non-degenerate spaces only")
    f, q = sp.field, sp.q
    N = len(planes)
    pts, npts = planes.point_incidence()
    inc = np.zeros((N, npts), dtype=np.float32)
    np.put_along_axis(inc, pts, 1.0, axis=1)
    for start in range(0, N, block):
        sl = slice(start, min(start + block, N))
        inter = np.rint(inc[sl] @ inc.T).astype(np.int64)
        a, b, c, d = pairing_block(planes, sl)
        yield start, _decide(f, inter == q + 1, inter == 1, a, b, c, d)


def pairing_block(planes: PlaneSet, sl: slice):
    """Pairings of every W (columns) relative to each S in the slice (rows)."""
    sp = planes.space
    f = sp.field
    x, y = planes.w[sl], planes.u[sl]
    if f.is_prime:
        p = f.p
        Cw = np.array([sp.form_coefficients(v) for v in planes.w], dtype=np.float64)
        Cu = np.array([sp.form_coefficients(v) for v in planes.u], dtype=np.float64)
        xf, yf = x.astype(np.float64), y.astype(np.float64)
        mod = lambda M: np.rint(M).astype(np.int64) % p
        return mod(xf @ Cw.T), mod(yf @ Cw.T), mod(xf @ Cu.T), mod(yf @ Cu.T)
    W, U = planes.w[None, :, :], planes.u[None, :, :]
    X, Y = x[:, None, :], y[:, None, :]
    return psi_rows(sp, W, X), psi_rows(sp, W, Y), psi_rows(sp, U, X), psi_rows(sp, U, Y)


def class_matrix(planes: PlaneSet, block: int = 512) -> np.ndarray:
    N = len(planes)
    C = np.empty((N, N), dtype=np.int8)
    for start, rows in class_row_blocks(planes, block):
        C[start:start + len(rows)] = rows
    return C


def case_census(sp: SympSpace, S: Plane | int, planes: PlaneSet | None = None) -> CaseCensus:
    if sp.r != 0:
        raise ValueError("pair classification is defined for non-degenerate spaces only")
    if planes is None:
        planes = enumerate_planes(sp)
    sid = S if isinstance(S, (int, np.integer)) else planes.index_of(S.rows)
    cls = classify_pairs(planes, sid, np.arange(len(planes)))
    counts = np.bincount(cls, minlength=7)[1:7]
    return CaseCensus(tuple(int(c) for c in counts))
