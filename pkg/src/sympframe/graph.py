"""The orthogonality graph on planes: structure, walks, transition counts, spectrum."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
import scipy.sparse as sps
from scipy.sparse import csgraph

from . import oracle
from .planes import (
    Plane,
    PlaneSet,
    class_matrix,
    classify_pairs,
    enumerate_planes,
    pairing_block,
)
from .symp import SympSpace, psi, psi_rows, project, subspace_sum

DEFAULT_SEED = 20240917


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get("FRAMES_THREADS", "1")))
    except ValueError:
        return 1


class OrthoGraph:
    """Planes of a non-degenerate symplectic space, adjacent when orthogonal."""

    def __init__(self, sp: SympSpace, planes: PlaneSet, adjacency: sps.csr_matrix):
        self.space = sp
        self.planes = planes
        self.adjacency = adjacency
        deg = np.diff(adjacency.indptr)
        if len(deg) and not (deg == deg[0]).all():
            raise AssertionError("orthogonality graph is not regular")
        self.degree = int(deg[0]) if len(deg) else 0
        self._classes = None

    def __len__(self) -> int:
        return len(self.planes)

    @property
    def n_edges(self) -> int:
        return self.adjacency.nnz // 2

    def neighbors(self, v: int) -> np.ndarray:
        A = self.adjacency
        return A.indices[A.indptr[v]:A.indptr[v + 1]]

    def classes(self) -> np.ndarray:
        """Full class matrix (cached); entry [S, W] is the class of W relative to S."""
        if self._classes is None:
            self._classes = class_matrix(self.planes)
        return self._classes

    def class_row(self, s: int) -> np.ndarray:
        if self._classes is not None:
            return self._classes[s]
        return classify_pairs(self.planes, s, np.arange(len(self)))


def build_graph(sp: SympSpace, planes: PlaneSet | None = None, block: int = 512) -> OrthoGraph:
    if sp.r != 0:
        raise ValueError("the orthogonality graph is built for non-degenerate spaces only")
    if sp.n < 2:
        raise ValueError("need n >= 2 (for n = 1 there is a single plane)")
    if planes is None:
        planes = enumerate_planes(sp)
    N = len(planes)
    rows, cols = [], []
    for start in range(0, N, block):
        sl = slice(start, min(start + block, N))
        a, b, c, d = pairing_block(planes, sl)
        i, j = np.nonzero((a == 0) & (b == 0) & (c == 0) & (d == 0))
        rows.append(i + start)
        cols.append(j)
    rows = np.concatenate(rows)
    cols = np.concatenate(cols)
    A = sps.csr_matrix((np.ones(len(rows), dtype=np.int64), (rows, cols)), shape=(N, N))
    A.sort_indices()
    return OrthoGraph(sp, planes, A)


def eccentricities(A: sps.csr_matrix, sources) -> np.ndarray:
    """BFS eccentricity (within the source's component) of each source.

    Frontiers for a block of sources advance together as one sparse product;
    a source stops expanding once it has reached every vertex.
    """
    N = A.shape[0]
    sources = np.asarray(sources)
    B = len(sources)
    ar = np.arange(B)
    reached = np.zeros((B, N), dtype=bool)
    reached[ar, sources] = True
    front = sps.csr_matrix((np.ones(B, dtype=np.int32), (ar, sources)), shape=(B, N))
    A32 = A.astype(np.int32)
    ecc = np.zeros(B, dtype=np.int64)
    level = 0
    while front.nnz:
        level += 1
        new = (front @ A32).toarray() > 0
        new &= ~reached
        ecc[new.any(axis=1)] = level
        reached |= new
        new[reached.all(axis=1)] = False
        front = sps.csr_matrix(new.astype(np.int32))
    return ecc


def components_and_diameter(g: OrthoGraph, chunk: int = 256) -> tuple[int, list[int]]:
    """Number of connected components and the (BFS-exact) diameter of each."""
    ncomp, labels = csgraph.connected_components(g.adjacency, directed=False)
    diam = np.zeros(ncomp, dtype=np.int64)
    N = len(g)
    for start in range(0, N, chunk):
        idx = np.arange(start, min(start + chunk, N))
        ecc = eccentricities(g.adjacency, idx)
        np.maximum.at(diam, labels[idx], ecc)
    return int(ncomp), [int(x) for x in diam]


# -- walks ---------------------------------------------------------------------

@dataclass(frozen=True)
class WalkVector:
    r: int
    values: tuple[int, ...]
    realized: tuple[bool, ...]
    constant: bool


def walk_counts(g: OrthoGraph, s: int, r: int) -> np.ndarray:
    """Number of walks of length r from plane s to every plane."""
    x = np.zeros(len(g), dtype=np.int64)
    x[s] = 1
    for _ in range(r):
        x = g.adjacency @ x
    return x


def walk_vector(g: OrthoGraph, s: int, r: int) -> WalkVector:
    if r < 0:
        raise ValueError("walk length must be >= 0")
    x = walk_counts(g, s, r)
    cls = g.class_row(s)
    vals, real, const = [], [], True
    for i in range(1, 7):
        bucket = x[cls == i]
        real.append(bucket.size > 0)
        if bucket.size == 0:
            vals.append(0)
            continue
        const &= bool((bucket == bucket[0]).all())
        vals.append(int(bucket[0]))
    return WalkVector(r, tuple(vals), tuple(real), const)


def mu_power_walks(mu, r: int) -> list[int]:
    """mu^r l_0 with l_0 = (1, 0, 0, 0, 0, 0), in exact integers."""
    v = [1, 0, 0, 0, 0, 0]
    for _ in range(r):
        v = [sum(int(mu[i][j]) * v[j] for j in range(6)) for i in range(6)]
    return v


# -- transition counts ---------------------------------------------------------

def transition_counts(g: OrthoGraph, s: int, w: int) -> tuple[int, ...]:
    """(|C_1|, ..., |C_6|): neighbours T of S split by the class of W relative to T."""
    nb = g.neighbors(s)
    if g._classes is not None:
        cls = g._classes[nb, w]
    else:
        cls = classify_pairs(g.planes, nb, w)
    return tuple(int(c) for c in np.bincount(cls, minlength=7)[1:7])


@dataclass
class MuReport:
    n: int
    q: int
    matrix: list[list[int]]
    realized: tuple[bool, ...]
    pairs_checked: list[int]
    constant: bool
    row_sums_ok: bool
    exhaustive: bool
    seed: int | None
    oracle_diff: list[tuple[int, int, int, int]] = field(default_factory=list)

    @property
    def matches_oracle(self) -> bool:
        return not self.oracle_diff


def empirical_mu(
    g: OrthoGraph,
    samples: int | None = None,
    seed: int = DEFAULT_SEED,
    exhaustive_limit: int = 1000,
) -> MuReport:
    """Count transitions per class of pair.

    Exhaustive over all ordered pairs when `samples` is None and the graph
    has at most `exhaustive_limit` vertices; otherwise `samples` random pairs
    per realised class (default 25) drawn with the given seed.
    """
    N = len(g)
    n, q = g.space.n, g.space.q
    rows: list[tuple[int, ...] | None] = [None] * 6
    checked = [0] * 6
    constant = True

    def record(i, counts, k=1):
        nonlocal constant
        if rows[i - 1] is None:
            rows[i - 1] = counts
        elif rows[i - 1] != counts:
            constant = False
        checked[i - 1] += k

    exhaustive = samples is None and N <= exhaustive_limit
    if exhaustive:
        C = g.classes()
        for s in range(N):
            block = C[g.neighbors(s)]
            counts = np.stack([(block == j).sum(axis=0) for j in range(1, 7)], axis=1)
            for i in range(1, 7):
                sel = counts[C[s] == i]
                if len(sel) == 0:
                    continue
                if not (sel == sel[0]).all():
                    constant = False
                record(i, tuple(int(t) for t in sel[0]), len(sel))
        used_seed = None
    else:
        samples = 25 if samples is None else samples
        rng = np.random.default_rng(seed)
        need = {i: samples for i in range(1, 7)}
        attempts = 0
        while any(need.values()) and attempts < 50 * samples:
            attempts += 1
            s = int(rng.integers(N))
            cls = g.class_row(s)
            for i in range(1, 7):
                if not need[i]:
                    continue
                cand = np.nonzero(cls == i)[0]
                if len(cand) == 0:
                    continue
                w = int(cand[rng.integers(len(cand))])
                record(i, transition_counts(g, s, w))
                need[i] -= 1
        used_seed = seed

    realized = tuple(r is not None for r in rows)
    matrix = [list(r) if r is not None else [0] * 6 for r in rows]
    d = g.degree
    row_sums_ok = all(sum(r) == d for r, ok in zip(matrix, realized) if ok)
    ref = oracle.mu_table(n, q)
    diff = []
    for i in range(6):
        if not realized[i]:
            continue
        for j in range(6):
            if ref.entries[i][j] != matrix[i][j]:
                diff.append((i + 1, j + 1, matrix[i][j], ref.entries[i][j]))
    if realized != ref.realized:
        diff.append((0, 0, int(sum(realized)), int(sum(ref.realized))))
    return MuReport(n, q, matrix, realized, checked, constant, row_sums_ok, exhaustive, used_seed, diff)


def mu5_check(g: OrthoGraph, s: int, w: int) -> tuple[int, Fraction]:
    """(empirical mu_5, closed-form mu_5) for the pair (S, W)."""
    sp, P = g.space, g.planes
    empirical = transition_counts(g, s, w)[4]
    S, W = P[s], P[w]
    sum_dim = subspace_sum(sp, S.subspace, W.subspace).dim
    _, _, wS = project(sp, W.w, S)
    _, _, uS = project(sp, W.u, S)
    formula = oracle.mu5_formula(sp.n, sp.q, sum_dim, psi(sp, wS, uS) != 0)
    return empirical, formula


def degenerate_sum_witness(sp: SympSpace, W: Plane, T: Plane):
    """The unique pair (x, y) in T with psi(x,y)=1, psi(x,w)=1=psi(y,u), psi(x,u)=0=psi(y,w).

    (w, u) is the cached symplectic basis of W.  Returns None when no such
    pair exists, which happens exactly when W + T is non-degenerate.
    """
    f = sp.field
    w, u = W.w, W.u
    x, y = T.w, T.u
    lin = lambda a, v, b_, t: f.add_table[f.mul_table[a, v], f.mul_table[b_, t]]
    x2 = lin(psi(sp, y, u), x, f.neg(psi(sp, x, u)), y)
    y2 = lin(f.neg(psi(sp, y, w)), x, psi(sp, x, w), y)
    ok = (
        psi(sp, x2, y2) == 1
        and psi(sp, x2, w) == 1
        and psi(sp, y2, u) == 1
        and psi(sp, x2, u) == 0
        and psi(sp, y2, w) == 0
    )
    return (x2, y2) if ok else None


def witness_conditions(sp: SympSpace, W: Plane, x, y) -> bool:
    w, u = W.w, W.u
    return (
        psi(sp, x, y) == 1
        and psi(sp, x, w) == 1
        and psi(sp, y, u) == 1
        and psi(sp, x, u) == 0
        and psi(sp, y, w) == 0
    )


@dataclass
class WitnessCensus:
    """Witness data for one S: rows are planes W, columns the neighbours T of S."""

    s: int
    w_ids: np.ndarray
    t_ids: np.ndarray
    solutions: np.ndarray  # number of (x, y) in T satisfying the five conditions
    formula_ok: np.ndarray  # closed-form pair satisfies them (and is the brute-force one)
    classes: np.ndarray  # class of W relative to T


def witness_census(g: OrthoGraph, s: int, w_ids=None) -> WitnessCensus:
    """Brute-force count of witness pairs over all (W, T) with T orthogonal to S.

    For every pair of coefficient vectors (a, b), (c, d) the candidate
    x = a t_w + b t_u, y = c t_w + d t_u is tested, so each (W, T) cell is
    checked against all q^4 ordered pairs of vectors of T.
    """
    sp, P = g.space, g.planes
    f = sp.field
    if w_ids is None:
        w_ids = np.nonzero(g.class_row(s) == 3)[0]
    w_ids = np.asarray(w_ids)
    t_ids = g.neighbors(s)
    ww, wu = P.w[w_ids][:, None, :], P.u[w_ids][:, None, :]
    tw, tu = P.w[t_ids][None], P.u[t_ids][None]
    M, A = f.mul_table, f.add_table

    def conds(x, y):
        return (
            (psi_rows(sp, x, y) == 1)
            & (psi_rows(sp, x, ww) == 1)
            & (psi_rows(sp, y, wu) == 1)
            & (psi_rows(sp, x, wu) == 0)
            & (psi_rows(sp, y, ww) == 0)
        )

    alpha = psi_rows(sp, tu, wu)[..., None]
    beta = f.neg_table[psi_rows(sp, tw, wu)][..., None]
    gamma = f.neg_table[psi_rows(sp, tu, ww)][..., None]
    delta = psi_rows(sp, tw, ww)[..., None]
    fx = A[M[alpha, tw], M[beta, tu]]
    fy = A[M[gamma, tw], M[delta, tu]]
    formula_hits = conds(fx, fy)

    q = sp.q
    solutions = np.zeros((len(w_ids), len(t_ids)), dtype=np.int64)
    same = np.zeros_like(formula_hits)
    for a in range(q):
        for b_ in range(q):
            x = A[M[a, tw], M[b_, tu]]
            for c_ in range(q):
                for d_ in range(q):
                    y = A[M[c_, tw], M[d_, tu]]
                    hit = conds(x, y)
                    solutions += hit
                    same |= hit & (fx == x).all(-1) & (fy == y).all(-1)
    classes = classify_pairs(P, np.repeat(t_ids, len(w_ids)), np.tile(w_ids, len(t_ids)))
    classes = classes.reshape(len(t_ids), len(w_ids)).T
    return WitnessCensus(s, w_ids, t_ids, solutions, formula_hits & same, classes)


# -- spectrum ------------------------------------------------------------------

@dataclass
class SpectrumCertificate:
    n: int
    q: int
    vertices: int
    degree: int
    eigenvalues: list[int]
    multiplicities: list[int] | None
    traces: list[int]
    annihilation_verified: bool
    arithmetic: str
    lambda_min_normalized: Fraction | None
    moments_ok: bool
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.annihilation_verified and self.moments_ok and not self.failures

    @property
    def minimal_polynomial_roots(self) -> list[int]:
        if self.multiplicities is None:
            return []
        return [lam for lam, m in zip(self.eigenvalues, self.multiplicities) if m > 0]


def _primes_above(start: int, count: int) -> list[int]:
    from .ff import is_prime

    out, x = [], start
    while len(out) < count:
        if is_prime(x):
            out.append(x)
        x += 1
    return out


def solve_vandermonde(lams: list[int], traces: list[int]) -> list[Fraction]:
    """Solve sum_i m_i lam_i^k = traces[k] (k = 0..L-1) exactly."""
    L = len(lams)
    M = [[Fraction(lam) ** k for lam in lams] + [Fraction(traces[k])] for k in range(L)]
    for col in range(L):
        piv = next(r for r in range(col, L) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        inv = 1 / M[col][col]
        M[col] = [v * inv for v in M[col]]
        for r in range(L):
            if r != col and M[r][col] != 0:
                fct = M[r][col]
                M[r] = [a - fct * b for a, b in zip(M[r], M[col])]
    return [M[i][L] for i in range(L)]


def spectrum_certificate(g: OrthoGraph, eigen: list[int] | None = None, block: int = 512) -> SpectrumCertificate:
    """Verify prod (A - lam I) = 0 exactly and recover multiplicities from tr(A^k).

    Annihilation is checked column block by column block in int64 when the
    entry bound prod (d + |lam|) fits, otherwise modulo enough primes above
    2^30 that their product exceeds twice the bound.
    """
    sp = g.space
    n, q = sp.n, sp.q
    lams = list(eigen) if eigen is not None else oracle.eigenvalues(n, q)
    A = g.adjacency
    N, d = len(g), g.degree
    bound = 1
    for lam in lams:
        bound *= d + abs(lam)
    if bound < 2**62:
        moduli = [None]
        arithmetic = "int64"
    else:
        primes, prod = [], 1
        for p in _primes_above(2**30, 64):
            primes.append(p)
            prod *= p
            if prod > 2 * bound:
                break
        moduli = primes
        arithmetic = "modular:" + ",".join(map(str, primes))
    L = len(lams)
    nprod = max(0, (L - 1) // 2)

    def run_block(start):
        stop = min(start + block, N)
        E = np.zeros((N, stop - start), dtype=np.int64)
        E[np.arange(start, stop), np.arange(stop - start)] = 1
        zero = True
        for mod in moduli:
            M = E
            for lam in lams:
                M = A @ M - lam * M
                if mod is not None:
                    M %= mod
            zero &= not M.any()
        # traces via A symmetric: tr(A^(2k)) = sum P_k^2, tr(A^(2k+1)) = sum P_k P_{k+1}
        Ps = [E]
        for _ in range(nprod + 1):
            Ps.append(A @ Ps[-1])
        tr = [0] * L
        for k in range(L):
            h = k // 2
            if k % 2 == 0:
                tr[k] = int((Ps[h].astype(object) * Ps[h]).sum()) if h > 1 else int(np.sum(Ps[h] * Ps[h]))
            else:
                tr[k] = int(np.sum(Ps[h] * Ps[h + 1]))
        return zero, tr

    starts = list(range(0, N, block))
    threads = thread_count()
    if threads > 1:
        with ThreadPoolExecutor(threads) as ex:
            results = list(ex.map(run_block, starts))
    else:
        results = [run_block(s) for s in starts]
    annihilated = all(z for z, _ in results)
    traces = [sum(t[k] for _, t in results) for k in range(L)]

    failures = []
    mults = None
    sol = solve_vandermonde(lams, traces)
    if all(m.denominator == 1 and m >= 0 for m in sol):
        mults = [int(m) for m in sol]
    else:
        failures.append(f"non-integral or negative multiplicities {sol}")
    if not annihilated:
        failures.append("product of (A - lam I) is not zero")
    moments_ok = (
        mults is not None
        and sum(mults) == N
        and sum(m * lam for m, lam in zip(mults, lams)) == 0
        and sum(m * lam * lam for m, lam in zip(mults, lams)) == N * d
    )
    if mults is not None and not moments_ok:
        failures.append("moment identities fail")
    lam_norm = None
    if mults is not None:
        nontriv = [lam for lam, m in zip(lams, mults) if m > 0 and lam != d]
        ncomp = dict(zip(lams, mults)).get(d, 0)
        if nontriv and ncomp == 1:
            lam_norm = 1 - Fraction(max(nontriv), d)
    return SpectrumCertificate(n, q, N, d, lams, mults, traces, annihilated, arithmetic, lam_norm, moments_ok, failures)


def annihilates(g: OrthoGraph, roots: list[int]) -> bool:
    """Exact check that prod (A - lam I) over `roots` vanishes (dense, small graphs)."""
    A = g.adjacency.toarray().astype(object)
    M = np.eye(len(g), dtype=object)
    for lam in roots:
        M = A.dot(M) - lam * M
    return not M.any()
