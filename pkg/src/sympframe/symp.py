"""Symplectic (possibly degenerate) spaces GF(q)^(2n+r) and the projection calculus.

Coordinates 0..2n-1 carry the standard alternating form
    psi(u, v) = sum_i u_i v_{n+i} - u_{n+i} v_i,
and coordinates 2n..2n+r-1 span the radical.  Vectors are numpy int64
arrays of field-element indices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .ff import FieldSpec, make_field


@dataclass(frozen=True)
class SympSpace:
    field: FieldSpec
    n: int
    r: int = 0

    def __post_init__(self):
        if self.n < 1 or self.r < 0:
            raise ValueError(f"need n >= 1 and r >= 0, got n={self.n}, r={self.r}")

    @property
    def dim(self) -> int:
        return 2 * self.n + self.r

    @property
    def q(self) -> int:
        return self.field.q

    def unit(self, i: int) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[i] = 1
        return v

    def zero(self) -> np.ndarray:
        return np.zeros(self.dim, dtype=np.int64)

    def vector(self, coords) -> np.ndarray:
        v = np.asarray(coords, dtype=np.int64)
        if v.shape != (self.dim,):
            raise ValueError(f"expected {self.dim} coordinates, got shape {v.shape}")
        if v.min(initial=0) < 0 or v.max(initial=0) >= self.q:
            raise ValueError("coordinate out of field range")
        return v

    def random_vector(self, rng) -> np.ndarray:
        return rng.integers(0, self.q, size=self.dim).astype(np.int64)

    def form_coefficients(self, u: np.ndarray) -> np.ndarray:
        """Row c with psi(u, v) = sum_j c_j v_j."""
        f, n = self.field, self.n
        c = np.zeros(self.dim, dtype=np.int64)
        c[:n] = f.neg_table[u[n:2 * n]]
        c[n:2 * n] = u[:n]
        return c


def space(q: int, n: int, r: int = 0) -> SympSpace:
    return SympSpace(make_field(q), n, r)


def _check(sp, *vs):
    for v in vs:
        if np.shape(v)[-1] != sp.dim:
            raise ValueError(f"vector of length {np.shape(v)[-1]} is not in a space of dimension {sp.dim}")


def psi(sp: SympSpace, u, v) -> int:
    _check(sp, u, v)
    return int(psi_rows(sp, np.asarray(u)[None], np.asarray(v)[None])[0])


def psi_rows(sp: SympSpace, U: np.ndarray, V: np.ndarray) -> np.ndarray:
    """Rowwise psi for (N, dim) arrays (broadcasting allowed)."""
    f, n = sp.field, sp.n
    U = np.asarray(U)
    V = np.asarray(V)
    if f.is_prime:
        p = f.p
        s = (U[..., :n] * V[..., n:2 * n]).sum(-1) - (U[..., n:2 * n] * V[..., :n]).sum(-1)
        return s % p
    left = f.mul_table[U[..., :n], V[..., n:2 * n]]
    right = f.mul_table[U[..., n:2 * n], V[..., :n]]
    return linalg.vsum(f, f.add_table[left, f.neg_table[right]], axis=-1)


@dataclass(frozen=True)
class Subspace:
    """A subspace stored by its canonical RREF basis."""

    rows: tuple[tuple[int, ...], ...]
    ambient_dim: int

    @property
    def dim(self) -> int:
        return len(self.rows)

    def matrix(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64).reshape(self.dim, self.ambient_dim)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def span(sp: SympSpace, vectors) -> Subspace:
    vectors = [np.asarray(v, dtype=np.int64) for v in vectors]
    _check(sp, *vectors)
    R, _ = linalg.rref(sp.field, vectors) if vectors else (np.zeros((0, sp.dim), np.int64), [])
    return Subspace(tuple(tuple(int(x) for x in row) for row in R), sp.dim)


def subspace_sum(sp: SympSpace, *subs: Subspace) -> Subspace:
    rows = [np.array(r) for s in subs for r in s.rows]
    return span(sp, rows)


def contains(sp: SympSpace, S: Subspace, v) -> bool:
    return subspace_sum(sp, S, span(sp, [v])).dim == S.dim


def radical_space(sp: SympSpace) -> Subspace:
    return span(sp, [sp.unit(2 * sp.n + i) for i in range(sp.r)])


def intersection_dim(sp: SympSpace, S: Subspace, T: Subspace) -> int:
    return S.dim + T.dim - subspace_sum(sp, S, T).dim


def orth_complement(sp: SympSpace, S: Subspace) -> Subspace:
    if S.dim == 0:
        return span(sp, [sp.unit(i) for i in range(sp.dim)])
    eqs = np.array([sp.form_coefficients(np.array(r)) for r in S.rows])
    return span(sp, list(linalg.nullspace(sp.field, eqs, sp.dim)))


def gram(sp: SympSpace, vectors) -> np.ndarray:
    M = np.asarray(vectors, dtype=np.int64)
    return psi_rows(sp, M[:, None, :], M[None, :, :])


def radical_dim(sp: SympSpace, S: Subspace) -> int:
    """dim(S ∩ S^⊥): the corank of the Gram matrix of psi on S."""
    if S.dim == 0:
        return 0
    return S.dim - linalg.rank(sp.field, list(gram(sp, S.matrix())))


def is_nondegenerate(sp: SympSpace, S: Subspace) -> bool:
    ok = radical_dim(sp, S) == 0
    if ok and sp.r == 0:
        perp = orth_complement(sp, S)
        assert S.dim + perp.dim == 2 * sp.n
        assert intersection_dim(sp, S, perp) == 0
    return ok


def _basis_of(S):
    return S.sbasis if hasattr(S, "sbasis") else S


def project(sp: SympSpace, v, S) -> tuple[int, int, np.ndarray]:
    """Split v = v_x x + v_y y + v_S with v_S orthogonal to S = <x, y>, psi(x, y) = 1.

    `S` is either an (x, y) pair or an object exposing `.sbasis`.
    """
    x, y = (np.asarray(t) for t in _basis_of(S))
    if psi(sp, x, y) != 1:
        raise ValueError("basis is not symplectic: psi(x, y) != 1")
    f = sp.field
    v = np.asarray(v, dtype=np.int64)
    vx = psi(sp, v, y)
    vy = f.neg(psi(sp, v, x))
    vS = f.add_table[v, f.neg_table[f.add_table[f.mul_table[vx, x], f.mul_table[vy, y]]]]
    return vx, vy, vS


def circ(sp: SympSpace, S, w, u) -> int:
    """w ∘_S u = w_x u_y - w_y u_x (independent of the symplectic basis of S)."""
    f = sp.field
    wx, wy, _ = project(sp, w, S)
    ux, uy, _ = project(sp, u, S)
    return f.sub(f.mul(wx, uy), f.mul(wy, ux))


# -- serialization ------------------------------------------------------------

_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


def vector_to_str(sp: SympSpace, v) -> str:
    """Base-q digits, coordinate 0 first; dot-separated when q > 36."""
    if sp.q <= len(_DIGITS):
        return "".join(_DIGITS[int(c)] for c in v)
    return ".".join(str(int(c)) for c in v)


def vector_from_str(sp: SympSpace, s: str) -> np.ndarray:
    if sp.q <= len(_DIGITS):
        coords = [_DIGITS.index(ch) for ch in s]
    else:
        coords = [int(t) for t in s.split(".")]
    return sp.vector(coords)


def encode_row(q: int, row) -> int:
    """Row as a base-q integer, coordinate 0 most significant."""
    x = 0
    for c in row:
        x = x * q + int(c)
    return x


def decode_row(q: int, x: int, dim: int) -> np.ndarray:
    out = np.zeros(dim, dtype=np.int64)
    for i in range(dim - 1, -1, -1):
        out[i] = x % q
        x //= q
    return out
