import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sympframe import linalg
from sympframe.symp import (
    circ,
    contains,
    decode_row,
    encode_row,
    intersection_dim,
    is_nondegenerate,
    orth_complement,
    project,
    psi,
    radical_dim,
    radical_space,
    space,
    span,
    subspace_sum,
    vector_from_str,
    vector_to_str,
)

from _cache import planes_for


def e(sp, *idx):
    v = sp.zero()
    for i in idx:
        v[i] = 1
    return v


@pytest.mark.parametrize("q,n", [(2, 1), (3, 2), (4, 3), (5, 2)])
def test_standard_basis_pairings(q, n):
    sp = space(q, n)
    for i in range(n):
        for j in range(n):
            assert psi(sp, sp.unit(i), sp.unit(n + j)) == (1 if i == j else 0)
            assert psi(sp, sp.unit(i), sp.unit(j)) == 0
            assert psi(sp, sp.unit(n + i), sp.unit(n + j)) == 0


def test_radical_coordinates_are_inert():
    sp = space(3, 2, 2)
    for i in range(sp.dim):
        assert psi(sp, sp.unit(4), sp.unit(i)) == 0
    assert radical_space(sp).dim == 2
    assert orth_complement(sp, span(sp, [sp.unit(i) for i in range(sp.dim)])).rows == radical_space(sp).rows


def test_dimension_mismatch():
    sp = space(2, 2)
    with pytest.raises(ValueError):
        psi(sp, np.zeros(3, dtype=np.int64), np.zeros(4, dtype=np.int64))


vec_q = st.sampled_from([2, 3, 4, 5, 9])


@settings(max_examples=150, deadline=None)
@given(vec_q, st.integers(1, 3), st.integers(0, 2), st.integers(0, 2**32 - 1))
def test_alternating_and_bilinear(q, n, r, seed):
    sp = space(q, n, r)
    f = sp.field
    rng = np.random.default_rng(seed)
    u, v, w = (sp.random_vector(rng) for _ in range(3))
    a = int(rng.integers(q))
    assert psi(sp, v, v) == 0
    assert f.add(psi(sp, u, v), psi(sp, v, u)) == 0
    av_w = f.add_table[f.mul_table[a, v], w]
    assert psi(sp, u, av_w) == f.add(f.mul(a, psi(sp, u, v)), psi(sp, u, w))


def test_orth_complement_examples():
    sp = space(2, 2)
    whole = span(sp, [sp.unit(i) for i in range(4)])
    assert orth_complement(sp, whole).dim == 0
    S = span(sp, [sp.unit(0)])
    Sp = orth_complement(sp, S)
    assert Sp.dim == 3 and contains(sp, Sp, sp.unit(0))


def test_orth_complement_dimension_identity_gf2_6():
    # all 2-dim subspaces of GF(2)^6 with r = 1 (n = 2, r = 2 gives 6 coordinates too)
    for n, r in ((3, 0), (2, 2)):
        sp = space(2, n, r)
        rad = radical_space(sp)
        for R in linalg.enumerate_rref(sp.field, sp.dim, 2)[::7]:
            S = span(sp, list(R))
            perp = orth_complement(sp, S)
            assert S.dim + perp.dim == sp.dim + intersection_dim(sp, S, rad)


def test_double_complement_small_dimensions():
    # (S^perp)^perp = S + Rad(V) for every subspace in dimension <= 4 over GF(2), sampled in dimension 6
    for q, n, r, step in ((2, 1, 1, 1), (2, 2, 0, 1), (3, 1, 1, 1), (2, 1, 2, 1), (2, 3, 0, 5)):
        sp = space(q, n, r)
        rad = radical_space(sp)
        for k in range(0, sp.dim + 1):
            for R in linalg.enumerate_rref(sp.field, sp.dim, k)[::step]:
                S = span(sp, list(R))
                assert orth_complement(sp, orth_complement(sp, S)).rows == subspace_sum(sp, S, rad).rows


def test_radical_dim_examples():
    sp = space(2, 3)
    assert radical_dim(sp, span(sp, [e(sp, 0), e(sp, 3)])) == 0
    assert radical_dim(sp, span(sp, [e(sp, 0), e(sp, 1)])) == 2
    assert radical_dim(sp, span(sp, [e(sp, 0), e(sp, 1), e(sp, 3)])) == 1


def test_is_nondegenerate_examples():
    sp = space(2, 3)
    assert is_nondegenerate(sp, span(sp, [e(sp, 0), e(sp, 3)]))
    assert not is_nondegenerate(sp, span(sp, [e(sp, 0), e(sp, 1)]))
    assert is_nondegenerate(sp, span(sp, [e(sp, 0, 1), e(sp, 3)]))


def test_project_examples():
    sp = space(3, 3)
    x, y = e(sp, 0), e(sp, 3)
    w = e(sp, 1, 5)
    assert project(sp, w, (x, y))[:2] == (0, 0)
    assert np.array_equal(project(sp, w, (x, y))[2], w)
    vx, vy, vS = project(sp, x, (x, y))
    assert (vx, vy) == (1, 0) and not vS.any()
    v = sp.field.add_table[sp.field.add_table[x, y], w]
    vx, vy, vS = project(sp, v, (x, y))
    assert (vx, vy) == (1, 1) and np.array_equal(vS, w)


def test_project_rejects_non_symplectic_basis():
    sp = space(3, 2)
    with pytest.raises(ValueError):
        project(sp, sp.unit(0), (sp.unit(0), sp.unit(1)))


def random_symplectic_basis(P, i, rng):
    """A random symplectic basis of plane i: (a w + b u, c w + d u) with ad - bc = 1."""
    f = P.space.field
    q = f.q
    while True:
        a, b, c, d = (int(t) for t in rng.integers(0, q, 4))
        if f.sub(f.mul(a, d), f.mul(b, c)) == 1:
            break
    A, M = f.add_table, f.mul_table
    return A[M[a, P.w[i]], M[b, P.u[i]]], A[M[c, P.w[i]], M[d, P.u[i]]]


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([(2, 2), (3, 2), (2, 3), (4, 2)]), st.integers(0, 2**32 - 1))
def test_projection_basis_independent(qn, seed):
    q, n = qn
    P = planes_for(q, n)
    sp = P.space
    rng = np.random.default_rng(seed)
    i, j = (int(t) for t in rng.integers(len(P), size=2))
    v = sp.random_vector(rng)
    b1 = (P.w[i], P.u[i])
    b2 = random_symplectic_basis(P, i, rng)
    vx, vy, vS = project(sp, v, b1)
    _, _, vS2 = project(sp, v, b2)
    assert np.array_equal(vS, vS2)
    assert all(psi(sp, vS, t) == 0 for t in b1)
    f = sp.field
    recon = f.add_table[f.add_table[f.mul_table[vx, b1[0]], f.mul_table[vy, b1[1]]], vS]
    assert np.array_equal(recon, v)
    assert circ(sp, b1, P.w[j], P.u[j]) == circ(sp, b2, P.w[j], P.u[j])


def test_circ_examples():
    sp = space(2, 3)
    x, y = e(sp, 0), e(sp, 3)
    assert circ(sp, (x, y), e(sp, 1), e(sp, 4)) == 0
    assert circ(sp, (x, y), x, y) == 1


@pytest.mark.parametrize("q", [2, 3])
def test_circ_identity_exhaustive_n2(q):
    P = planes_for(q, 2)
    sp, f = P.space, P.space.field
    for i in range(len(P)):
        S = (P.w[i], P.u[i])
        for j in range(len(P)):
            w, u = P.w[j], P.u[j]
            _, _, wS = project(sp, w, S)
            _, _, uS = project(sp, u, S)
            assert circ(sp, S, w, u) == f.sub(1, psi(sp, wS, uS))


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([2, 3, 4, 5, 7, 9, 49]), st.integers(1, 4), st.integers(0, 2**32 - 1))
def test_vector_serialization_roundtrip(q, n, seed):
    sp = space(q, n)
    v = sp.random_vector(np.random.default_rng(seed))
    assert np.array_equal(vector_from_str(sp, vector_to_str(sp, v)), v)
    assert np.array_equal(decode_row(q, encode_row(q, v), sp.dim), v)


def test_vector_string_most_significant_first():
    sp = space(3, 1)
    assert vector_to_str(sp, [2, 1]) == "21"
    assert encode_row(3, [2, 1]) == 7


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([2, 3, 4, 5]), st.integers(1, 4), st.integers(1, 6), st.integers(0, 2**32 - 1))
def test_rref_is_canonical(q, k, ncols, seed):
    sp = space(q, 3)
    f = sp.field
    rng = np.random.default_rng(seed)
    rows = rng.integers(0, q, size=(k, ncols))
    R, piv = linalg.rref(f, rows)
    # pivots strictly increase, each pivot column is a unit column
    assert list(piv) == sorted(set(piv))
    for i, c in enumerate(piv):
        assert R[i, c] == 1 and (np.delete(R[:, c], i) == 0).all()
    # a random invertible recombination has the same RREF
    while True:
        M = rng.integers(0, q, size=(k, k))
        if linalg.rank(f, M) == k:
            break
    mixed = np.array([linalg.vsum(f, f.mul_table[M[i][:, None], rows], axis=0) for i in range(k)])
    R2, _ = linalg.rref(f, mixed)
    assert np.array_equal(R, R2)
    assert np.array_equal(linalg.rref(f, R)[0], R)


@pytest.mark.parametrize("q,ncols,k", [(2, 4, 2), (3, 4, 2), (2, 5, 3), (4, 3, 1)])
def test_enumerate_rref_counts_gaussian_binomial(q, ncols, k):
    num = den = 1
    for i in range(k):
        num *= q ** (ncols - i) - 1
        den *= q ** (i + 1) - 1
    R = linalg.enumerate_rref(make_field_q(q), ncols, k)
    assert len(R) == num // den
    assert len({r.tobytes() for r in R}) == len(R)


def make_field_q(q):
    from sympframe.ff import make_field

    return make_field(q)


def test_nullspace():
    f = make_field_q(5)
    rows = np.array([[1, 2, 3, 4], [0, 1, 1, 1]])
    N = linalg.nullspace(f, rows, 4)
    assert N.shape == (2, 4)
    assert ((rows @ N.T) % 5 == 0).all()
