import numpy as np
import scipy.sparse as sps
from hypothesis import given, settings, strategies as st

from sympframe.sparse_rank import complex_ranks, dense_rank_mod_p, rank_exact, rank_mod_p, reduce_columns


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 12), st.integers(1, 12), st.sampled_from([2, 3, 7, 1000003]), st.integers(0, 2**32 - 1))
def test_rank_matches_dense(m, n, p, seed):
    rng = np.random.default_rng(seed)
    M = rng.integers(-2, 3, size=(m, n)) * (rng.random((m, n)) < 0.4)
    assert rank_mod_p(sps.csc_matrix(M), p) == dense_rank_mod_p(M, p)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 10), st.integers(1, 10), st.integers(0, 2**32 - 1))
def test_exact_rank_matches_numpy(m, n, seed):
    rng = np.random.default_rng(seed)
    M = rng.integers(-3, 4, size=(m, n)) * (rng.random((m, n)) < 0.5)
    assert rank_exact(sps.csc_matrix(M)) == np.linalg.matrix_rank(M.astype(float))


def test_torsion_shows_up_mod_2():
    M = sps.csc_matrix(np.array([[2]]))
    assert rank_mod_p(M, 2) == 0 and rank_mod_p(M, 3) == 1 and rank_exact(M) == 1


def test_clearing_does_not_change_ranks():
    # boundary of a solid tetrahedron
    V = [(0,), (1,), (2,), (3,)]
    E = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    T = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    K = [(0, 1, 2, 3)]

    def bd(faces, simplices):
        idx = {f: i for i, f in enumerate(faces)}
        D = np.zeros((len(faces), len(simplices)), dtype=np.int64)
        for j, s in enumerate(simplices):
            for i in range(len(s)):
                D[idx[s[:i] + s[i + 1:]], j] = (-1) ** i
        return sps.csc_matrix(D)

    Ds = [bd(V, E), bd(E, T), bd(T, K)]
    for p in (2, 3, 1000003, None):
        assert complex_ranks(Ds, p) == complex_ranks(Ds, p, clearing=False) == [3, 3, 1]


def test_pivots_reported():
    M = sps.csc_matrix(np.array([[1, 1], [0, 1], [0, 0]]))
    r, piv = reduce_columns(M, 5)
    assert r == 2 and piv == [0, 1]
