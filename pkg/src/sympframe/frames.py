"""The frame complex: cliques of the orthogonality graph and their homology."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sps

from . import oracle
from .ff import is_prime
from .graph import OrthoGraph
from .sparse_rank import complex_ranks

DEFAULT_PRIMES = (1000003, 1000033)
DEFAULT_MAX_CELLS = 10**7
# total boundary nonzeros the pure-Python eliminator is allowed to take on
DEFAULT_MAX_NONZEROS = 2 * 10**7
EXACT_LIMIT = 5 * 10**4


def _edge_keys(g: OrthoGraph) -> np.ndarray:
    A = g.adjacency.tocoo()
    return np.sort(A.row.astype(np.int64) * len(g) + A.col)


def _adjacent(keys: np.ndarray, N: int, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    k = a.astype(np.int64) * N + b
    pos = np.searchsorted(keys, k)
    pos[pos == len(keys)] = 0
    return keys[pos] == k


def extend_cliques(g: OrthoGraph, cliques: np.ndarray, keys=None, chunk: int = 100_000) -> np.ndarray:
    """All (m+1)-cliques whose first m vertices form one of `cliques` (sorted rows)."""
    N = len(g)
    if keys is None:
        keys = _edge_keys(g)
    A = g.adjacency
    m = cliques.shape[1]
    out = []
    for start in range(0, len(cliques), chunk):
        C = cliques[start:start + chunk]
        last = C[:, -1]
        cnt = np.diff(A.indptr)[last]
        rep = np.repeat(np.arange(len(C)), cnt)
        offs = np.arange(cnt.sum()) - np.repeat(np.cumsum(cnt) - cnt, cnt)
        cand = A.indices[A.indptr[last][rep] + offs]
        keep = cand > last[rep]
        rep, cand = rep[keep], cand[keep]
        for i in range(m - 1):
            ok = _adjacent(keys, N, C[rep, i], cand)
            rep, cand = rep[ok], cand[ok]
        out.append(np.column_stack([C[rep], cand]))
    if not out:
        return np.zeros((0, m + 1), dtype=np.int64)
    return np.concatenate(out).astype(np.int64)


def enumerate_frames(g: OrthoGraph, m: int) -> np.ndarray:
    """All m-frames as an (f_m, m) array of sorted plane ids, in lexicographic order."""
    n = g.space.n
    if not 1 <= m <= n:
        raise ValueError(f"frame size m={m} outside [1, {n}]")
    return all_frames(g, m)[m - 1]


def all_frames(g: OrthoGraph, max_m: int | None = None) -> list[np.ndarray]:
    max_m = g.space.n if max_m is None else max_m
    keys = _edge_keys(g)
    out = [np.arange(len(g), dtype=np.int64)[:, None]]
    for _ in range(1, max_m):
        out.append(extend_cliques(g, out[-1], keys))
    return out


def f_vector(g: OrthoGraph, frames=None) -> tuple[int, ...]:
    frames = all_frames(g) if frames is None else frames
    return tuple(len(F) for F in frames)


def euler_characteristic(g: OrthoGraph, frames=None) -> int:
    f = (1,) + f_vector(g, frames)
    return sum((-1) ** (m + 1) * fm for m, fm in enumerate(f))


def _keys(F: np.ndarray, N: int) -> np.ndarray:
    if N ** F.shape[1] >= 2**63:
        raise OverflowError("simplex encoding overflows int64")
    k = np.zeros(len(F), dtype=np.int64)
    for i in range(F.shape[1]):
        k = k * N + F[:, i]
    return k


def boundary_matrix(faces: np.ndarray, simplices: np.ndarray, N: int) -> sps.csc_matrix:
    """Integer boundary of (k+1)-vertex simplices into k-vertex faces; signs (-1)^position."""
    f, m = simplices.shape
    face_keys = _keys(faces, N)
    rows, cols, vals = [], [], []
    for i in range(m):
        sub = np.delete(simplices, i, axis=1)
        idx = np.searchsorted(face_keys, _keys(sub, N))
        if not (face_keys[np.minimum(idx, len(face_keys) - 1)] == _keys(sub, N)).all():
            raise AssertionError("face of a frame is not a frame")
        rows.append(idx)
        cols.append(np.arange(f))
        vals.append(np.full(f, -1 if i % 2 else 1, dtype=np.int64))
    return sps.csc_matrix(
        (np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
        shape=(len(faces), f),
    )


@dataclass
class ChainComplex:
    frames: list[np.ndarray]
    boundaries: list[sps.csc_matrix]  # boundaries[k-1] = d_k : C_k -> C_{k-1}, integer signs
    p: int | None = None

    def reduced(self, p: int) -> list[sps.csc_matrix]:
        out = []
        for D in self.boundaries:
            D = D.copy()
            D.data %= p
            D.eliminate_zeros()
            out.append(D)
        return out

    def check_dd(self, p: int | None = None) -> bool:
        for k in range(1, len(self.boundaries)):
            P = self.boundaries[k - 1] @ self.boundaries[k]
            if p is not None:
                P.data %= p
                P.eliminate_zeros()
            if P.count_nonzero():
                return False
        return True

    @property
    def nonzeros(self) -> int:
        return sum(D.nnz for D in self.boundaries)


def boundary_matrices(g: OrthoGraph, max_dim: int | None = None, p: int | None = None, frames=None) -> ChainComplex:
    """Chain complex up to dimension max_dim (default n-1), entries reduced mod p if given."""
    n = g.space.n
    max_dim = n - 1 if max_dim is None else max_dim
    if not 0 <= max_dim <= n - 1:
        raise ValueError(f"max_dim must be in [0, {n - 1}]")
    if p is not None and not is_prime(p):
        raise ValueError(f"{p} is not prime")
    frames = all_frames(g, max_dim + 1) if frames is None else frames[:max_dim + 1]
    N = len(g)
    bd = [boundary_matrix(frames[k - 1], frames[k], N) for k in range(1, max_dim + 1)]
    cc = ChainComplex(frames, bd, p)
    if p is not None:
        cc.boundaries = cc.reduced(p)
    return cc


def maximality_holds(g: OrthoGraph, frames=None) -> bool:
    """Every (n-1)-frame lies in exactly one n-frame."""
    n = g.space.n
    frames = all_frames(g) if frames is None else frames
    if n < 2:
        return True
    D = boundary_matrix(frames[n - 2], frames[n - 1], len(g))
    per_face = np.diff(sps.csr_matrix(D).indptr)
    return bool((per_face == 1).all())


@dataclass
class BettiReport:
    n: int
    q: int
    f_vector: tuple[int, ...]
    euler: int
    betti: dict[str, list[int]] = field(default_factory=dict)
    ranks: dict[str, list[int]] = field(default_factory=dict)
    agree: bool = True
    euler_residual: dict[str, int] = field(default_factory=dict)
    skipped: str | None = None

    @property
    def ok(self) -> bool:
        return self.skipped is None and self.agree and not any(self.euler_residual.values())

    def values(self) -> list[int] | None:
        if not self.betti:
            return None
        return next(iter(self.betti.values()))


def reduced_betti(f: tuple[int, ...], ranks: list[int]) -> list[int]:
    """beta~_k = f_{k+1} - rank d_k - rank d_{k+1}, with d_0 the augmentation (rank 1)."""
    top = len(f)
    r = [1 if f[0] else 0] + list(ranks) + [0] * (top - len(ranks))
    return [f[k] - r[k] - r[k + 1] for k in range(top)]


def betti(
    g: OrthoGraph,
    primes=DEFAULT_PRIMES,
    exact: bool = False,
    max_cells: int = DEFAULT_MAX_CELLS,
    max_nonzeros: int = DEFAULT_MAX_NONZEROS,
) -> BettiReport:
    """Reduced Betti numbers over GF(p) for each prime (and over Q when `exact`)."""
    n, q = g.space.n, g.space.q
    for p in primes:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
    fo = oracle.f_vector(n, q)
    cells = sum(fo)
    nnz_est = sum((m + 1) * f for m, f in enumerate(fo[1:], start=1))
    chi = oracle.euler_char(n, q)
    if cells > max_cells:
        return BettiReport(n, q, fo, chi, skipped=f"{cells} cells exceed the budget of {max_cells}")
    if nnz_est > max_nonzeros:
        return BettiReport(n, q, fo, chi, skipped=f"{nnz_est} boundary nonzeros exceed the budget of {max_nonzeros}")
    frames = all_frames(g)
    f = f_vector(g, frames)
    cc = boundary_matrices(g, frames=frames)
    chi = euler_characteristic(g, frames)
    rep = BettiReport(n, q, f, chi)
    fields = [str(p) for p in primes]
    if exact:
        if cells > EXACT_LIMIT:
            raise ValueError(f"exact mode is limited to {EXACT_LIMIT} simplices (have {cells})")
        fields.append("Q")
    for key in fields:
        if key == "Q":
            ranks = complex_ranks(cc.boundaries, None)
        else:
            ranks = complex_ranks(cc.reduced(int(key)), int(key))
        b = reduced_betti(f, ranks)
        rep.ranks[key] = ranks
        rep.betti[key] = b
        rep.euler_residual[key] = sum((-1) ** k * x for k, x in enumerate(b)) - chi
    vals = list(rep.betti.values())
    rep.agree = all(v == vals[0] for v in vals)
    return rep


def write_matrix_market(D: sps.spmatrix, path_or_file, comment: str = "") -> None:
    """Coordinate MatrixMarket text, 1-based (row, col, value) triples."""
    D = sps.coo_matrix(D)
    order = np.lexsort((D.row, D.col))
    lines = ["%%MatrixMarket matrix coordinate integer general"]
    if comment:
        lines.append("% " + comment)
    lines.append(f"{D.shape[0]} {D.shape[1]} {D.nnz}")
    lines += [f"{D.row[i] + 1} {D.col[i] + 1} {D.data[i]}" for i in order]
    text = "\n".join(lines) + "\n"
    if hasattr(path_or_file, "write"):
        path_or_file.write(text)
    else:
        with open(path_or_file, "w") as fh:
            fh.write(text)
