import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sympframe import oracle
from sympframe.planes import (
    canonical_plane,
    case_census,
    class_matrix,
    classify,
    classify_pairs,
    enumerate_planes,
    enumerate_planes_by_pairs,
)
from sympframe.symp import is_nondegenerate, psi, psi_rows, space

from _cache import planes_for


def vec(sp, *idx):
    v = sp.zero()
    for i in idx:
        v[i] = 1
    return v


def test_canonical_plane_examples():
    sp = space(3, 3)
    S = canonical_plane(sp, sp.unit(0), sp.unit(3))
    assert psi(sp, S.w, S.u) == 1
    assert canonical_plane(sp, sp.unit(3), sp.unit(0)) == S
    with pytest.raises(ValueError, match="degenerate"):
        canonical_plane(sp, sp.unit(0), sp.unit(1))
    with pytest.raises(ValueError, match="dependent"):
        canonical_plane(sp, sp.unit(0), sp.field.mul_table[2, sp.unit(0)])


def test_canonical_plane_basis_is_rescaled_second_row():
    sp = space(5, 2)
    f = sp.field
    v1 = sp.vector([1, 0, 3, 2])
    v2 = sp.vector([0, 1, 4, 4])
    P = canonical_plane(sp, v1, v2)
    r0, r1 = (np.array(r) for r in P.rows)
    assert np.array_equal(P.w, r0)
    assert np.array_equal(P.u, f.mul_table[f.inv(psi(sp, r0, r1)), r1])


@pytest.mark.parametrize("q,n,r,count", [(2, 2, 0, 20), (2, 3, 0, 336), (2, 1, 1, 4), (3, 1, 0, 1)])
def test_plane_counts(q, n, r, count):
    assert len(planes_for(q, n, r)) == count == oracle.plane_count(n, q, r)


@pytest.mark.parametrize("q,n,r", [(2, 2, 0), (3, 2, 0), (2, 1, 1), (4, 2, 0), (2, 2, 1)])
def test_enumeration_matches_pair_construction(q, n, r):
    sp = space(q, n, r)
    P = enumerate_planes(sp)
    ref = enumerate_planes_by_pairs(sp)
    assert sorted(tuple(map(tuple, rows)) for rows in P.rows.tolist()) == sorted(ref)


def test_plane_invariants_and_ids():
    P = planes_for(3, 2)
    sp = P.space
    for i, pl in enumerate(P):
        assert pl.id == i
        assert psi(sp, pl.w, pl.u) == 1
        assert is_nondegenerate(sp, pl.subspace)
        assert P.find(pl.w, pl.u) == i
    assert P.codes == sorted(P.codes)


def test_enumeration_is_deterministic():
    a = enumerate_planes(space(3, 2))
    b = enumerate_planes(space(3, 2))
    assert np.array_equal(a.rows, b.rows)


def test_classify_examples():
    sp = space(2, 3)
    P = planes_for(2, 3)
    S = canonical_plane(sp, vec(sp, 0), vec(sp, 3), P)
    assert classify(sp, S, S) == 1
    T = canonical_plane(sp, vec(sp, 1), vec(sp, 4), P)
    assert classify(sp, S, T) == 4
    # <e1+e2, e3+e4> with e2, e3 isotropic and orthogonal to S: a degenerate 4-dimensional sum
    W = canonical_plane(sp, vec(sp, 0, 1), vec(sp, 3, 2), P)
    assert classify(sp, S, W) == 3


def test_worked_example_pair_spans_three_dimensions():
    # <e1, e4> and <e1+e2, e4+e2> share the line spanned by e1 - e4, so the sum is 3-dimensional
    sp = space(2, 3)
    S = canonical_plane(sp, vec(sp, 0), vec(sp, 3))
    W = canonical_plane(sp, vec(sp, 0, 1), vec(sp, 3, 1))
    assert classify(sp, S, W) == 2
    P = planes_for(2, 3)
    assert (classify_pairs(P, P.find(S.w, S.u), np.arange(len(P))) == 3).any()


def test_classify_rejects_radical():
    sp = space(2, 1, 1)
    P = enumerate_planes(sp)
    with pytest.raises(ValueError):
        classify(sp, P[0], P[1])


@pytest.mark.parametrize("q,n", [(2, 2), (3, 2), (2, 3), (3, 3)])
def test_classification_symmetric(q, n):
    C = class_matrix(planes_for(q, n))
    assert (C == C.T).all()
    assert (np.diag(C) == 1).all()


@pytest.mark.parametrize("q,n", [(2, 2), (3, 2), (4, 2), (2, 3)])
def test_three_classifiers_agree(q, n):
    P = planes_for(q, n)
    sp = P.space
    C = class_matrix(P)
    rng = np.random.default_rng(7)
    s = rng.integers(len(P), size=400)
    w = rng.integers(len(P), size=400)
    assert np.array_equal(classify_pairs(P, s, w), C[s, w])
    for i, j in list(zip(s, w))[:60]:
        assert classify(sp, P[int(i)], P[int(j)]) == C[i, j]


def basis_predicates(P, s):
    """For one S and every W, which Table-1 basis conditions some symplectic basis of W meets."""
    sp, f = P.space, P.space.field
    q = f.q
    x, y = P.w[s], P.u[s]
    A, M, Ng = f.add_table, f.mul_table, f.neg_table

    def proj(v):
        vx = psi_rows(sp, v, y[None])
        vy = Ng[psi_rows(sp, v, x[None])]
        return A[v, Ng[A[M[vx[:, None], x[None]], M[vy[:, None], y[None]]]]]

    N = len(P)
    e2 = np.zeros(N, bool)
    e4 = np.zeros(N, bool)
    e56 = np.zeros(N, bool)
    e5 = np.zeros(N, bool)
    for a in range(q):
        for b in range(q):
            for c in range(q):
                for d in range(q):
                    if f.sub(f.mul(a, d), f.mul(b, c)) != 1:
                        continue
                    w = A[M[a, P.w], M[b, P.u]]
                    u = A[M[c, P.w], M[d, P.u]]
                    wS, uS = proj(w), proj(u)
                    w_in = (wS == w).all(1)
                    u_in = (uS == u).all(1)
                    pS = psi_rows(sp, wS, uS)
                    e2 |= wS.any(1) & ~uS.any(1)
                    e4 |= w_in & u_in
                    e56 |= (pS != 0) & ~w_in
                    e5 |= ~w_in & u_in
    wS, uS = proj(P.w), proj(P.u)
    pS = psi_rows(sp, wS, uS)
    rank2 = np.array([len({tuple(a), tuple(b)} - {tuple([0] * sp.dim)}) == 2 and not _parallel(f, a, b) for a, b in zip(wS, uS)])
    e3 = rank2 & (pS == 0)
    e6 = (pS != 0) & (A[1, Ng[pS]] != 0)
    return e2, e3, e4, e56, e5, e6


def _parallel(f, a, b):
    for t in range(1, f.q):
        if (f.mul_table[t, a] == b).all():
            return True
    return False


@pytest.mark.parametrize("q,n", [(2, 2), (3, 2), (2, 3)])
def test_table1_basis_characterisations(q, n):
    P = planes_for(q, n)
    C = class_matrix(P)
    for s in np.random.default_rng(3).choice(len(P), size=min(12, len(P)), replace=False):
        e2, e3, e4, e56, e5, e6 = basis_predicates(P, int(s))
        row = C[s]
        assert np.array_equal(e2, row == 2)
        assert np.array_equal(e3, row == 3)
        assert np.array_equal(e4, row == 4)
        assert np.array_equal(e56, np.isin(row, (5, 6)))
        assert np.array_equal(e5, row == 5)
        assert np.array_equal(e6, row == 6)


@pytest.mark.parametrize(
    "q,n,expected",
    [(2, 3, (1, 45, 90, 20, 180, 0)), (2, 2, (1, 9, 0, 1, 9, 0))],
)
def test_census_examples(q, n, expected):
    sp = space(q, n)
    P = planes_for(q, n)
    assert case_census(sp, 0, P).counts == expected
    assert case_census(sp, P[len(P) - 1], P).counts == expected


def test_census_q3_sums_to_plane_count():
    sp = space(3, 2)
    assert case_census(sp, 5, planes_for(3, 2)).total == 90


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([(2, 2), (3, 2), (2, 3), (4, 2), (5, 2)]), st.integers(0, 10**6))
def test_census_independent_of_base_plane(qn, seed):
    q, n = qn
    P = planes_for(q, n)
    s = seed % len(P)
    assert case_census(P.space, s, P).counts == oracle.table1(n, q).census
