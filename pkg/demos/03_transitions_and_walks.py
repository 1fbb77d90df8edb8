"""Transition counts between classes of pairs, and walks in the orthogonality graph."""

# %%
import numpy as np

from sympframe import oracle, space
from sympframe.graph import build_graph, empirical_mu, mu_power_walks, walk_vector, witness_census

g = build_graph(space(2, 3))
m = empirical_mu(g)
print("exhaustive transition matrix over", sum(m.pairs_checked), "ordered pairs")
for i, (row, ok) in enumerate(zip(m.matrix, m.realized), start=1):
    print(f"  class {i}: {row if ok else 'never occurs'}")
print("class-constant:", m.constant, " rows sum to degree:", m.row_sums_ok, " oracle diff:", m.oracle_diff)

# %%
# walks of length r from a plane, bucketed by class, against mu^r applied to (1,0,0,0,0,0)
mu = oracle.mu_table(3, 2).matrix()
for r in range(5):
    print(r, walk_vector(g, 0, r).values, mu_power_walks(mu, r))

# %%
# planes T orthogonal to S for which W + T is degenerate come with exactly one special basis
wc = witness_census(g, 0)
print("solutions per (W, T) cell:", np.unique(wc.solutions))
print("class-3 partners per W:", np.unique(((wc.solutions == 1) & (wc.classes == 3)).sum(1)))

# %%
# a sampled run on the larger graph over GF(3)
g33 = build_graph(space(3, 3))
m = empirical_mu(g33, samples=25, seed=7)
print("GF(3)^6, 25 pairs per class, matches closed form:", m.matches_oracle, " seed", m.seed)
