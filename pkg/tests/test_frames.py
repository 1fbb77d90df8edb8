import io

import numpy as np
import pytest
import scipy.io
import scipy.sparse as sps

from sympframe import frames as fr
from sympframe import oracle

from _cache import graph_for


def test_enumerate_frames_counts(g32):
    assert len(fr.enumerate_frames(g32, 1)) == 336
    F2 = fr.enumerate_frames(g32, 2)
    assert len(F2) == 3360 == g32.n_edges
    assert len(fr.enumerate_frames(g32, 3)) == 1120
    with pytest.raises(ValueError):
        fr.enumerate_frames(g32, 4)
    with pytest.raises(ValueError):
        fr.enumerate_frames(g32, 0)


def test_frames_are_sorted_cliques(g32):
    A = g32.adjacency
    F3 = fr.enumerate_frames(g32, 3)
    assert (np.diff(F3, axis=1) > 0).all()
    keys = [tuple(r) for r in F3.tolist()]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    for a, b in ((0, 1), (0, 2), (1, 2)):
        assert np.asarray(A[F3[:, a], F3[:, b]]).all()


@pytest.mark.parametrize("q,n", [(2, 2), (3, 2), (2, 3), (4, 2)])
def test_fvector_and_euler(q, n):
    g = graph_for(q, n)
    assert fr.f_vector(g) == oracle.f_vector(n, q)
    assert fr.euler_characteristic(g) == oracle.euler_char(n, q)


def test_euler_examples(g32, g22):
    assert fr.euler_characteristic(g32) == -1905
    assert fr.euler_characteristic(g22) == 9


def test_boundary_signs():
    # a single edge {0, 1}: +1 at the later vertex, -1 at the earlier one
    D = fr.boundary_matrix(np.array([[0], [1]]), np.array([[0, 1]]), 2).toarray()
    assert D[:, 0].tolist() == [-1, 1]


def test_boundary_matrices(g22, g32):
    cc = fr.boundary_matrices(g22, p=1000003)
    from sympframe.sparse_rank import rank_mod_p

    assert rank_mod_p(cc.boundaries[0], 1000003) == 10
    cc = fr.boundary_matrices(g32)
    assert cc.check_dd() and cc.check_dd(p=7)
    assert [D.shape for D in cc.boundaries] == [(336, 3360), (3360, 1120)]
    with pytest.raises(ValueError):
        fr.boundary_matrices(g32, p=1000001)
    with pytest.raises(ValueError):
        fr.boundary_matrices(g32, max_dim=3)


def test_maximality(g22, g32):
    assert fr.maximality_holds(g22) and fr.maximality_holds(g32)
    assert fr.maximality_holds(graph_for(3, 2))


def test_betti_small(g22, g32):
    b = fr.betti(g22, exact=True)
    assert all(v == [9, 0] for v in b.betti.values()) and b.ok
    b = fr.betti(g32, exact=True)
    assert b.betti == {"1000003": [0, 1905, 0], "1000033": [0, 1905, 0], "Q": [0, 1905, 0]}
    assert b.agree and b.ok


def test_betti_budget(g32):
    b = fr.betti(g32, max_cells=1000)
    assert b.skipped and not b.ok and b.values() is None


def test_betti_rejects_composite(g32):
    with pytest.raises(ValueError):
        fr.betti(g32, primes=(1000001,))


def test_reduced_betti_formula():
    # a hollow triangle: f = (3, 3), ranks d1 = 2
    assert fr.reduced_betti((3, 3), [2]) == [0, 1]


def test_matrix_market_roundtrip(g32):
    D = fr.boundary_matrices(g32).boundaries[0]
    buf = io.StringIO()
    fr.write_matrix_market(D, buf, "d1")
    text = buf.getvalue()
    assert text.startswith("%%MatrixMarket matrix coordinate integer general")
    back = scipy.io.mmread(io.StringIO(text))
    assert (sps.csc_matrix(back) != D).nnz == 0
