"""Enumerate planes and sort every other plane into the six relative positions."""

# %%
import numpy as np

from sympframe import oracle, space
from sympframe.planes import case_census, class_matrix, enumerate_planes

for q, n in [(2, 2), (3, 2), (2, 3), (3, 3)]:
    P = enumerate_planes(space(q, n))
    got = case_census(P.space, 0, P).counts
    print(f"q={q} n={n}: {len(P):5d} planes, census {got}, closed form {oracle.table1(n, q).census}")

# %%
# in a space with a radical every plane lifts in q^(2r) ways
for n, r, q in [(1, 1, 2), (1, 2, 2), (2, 1, 2), (1, 1, 3)]:
    print(f"n={n} r={r} q={q}: {len(enumerate_planes(space(q, n, r)))} planes, predicted {oracle.plane_count(n, q, r)}")

# %%
# the whole class matrix for GF(2)^6: symmetric, constant row counts
P = enumerate_planes(space(2, 3))
C = class_matrix(P)
counts = np.stack([(C == i).sum(1) for i in range(1, 7)], 1)
print("symmetric:", (C == C.T).all(), " distinct census rows:", np.unique(counts, axis=0))
