"""Frames (cliques of orthogonal planes), Euler characteristic, and Betti numbers mod large primes."""

# %%
from sympframe import oracle, space
from sympframe import frames as fr
from sympframe.graph import build_graph, components_and_diameter

for q, n in [(2, 2), (2, 3), (2, 4)]:
    g = build_graph(space(q, n))
    ncomp, diam = components_and_diameter(g)
    print(f"q={q} n={n}: {ncomp} components, diameters {set(diam)}")

# %%
g = build_graph(space(2, 3))
F = fr.all_frames(g)
print("f-vector", fr.f_vector(g, F), "closed form", oracle.f_vector(3, 2))
print("reduced Euler characteristic", fr.euler_characteristic(g, F))
print("each 2-frame completes uniquely:", fr.maximality_holds(g, F))

# %%
b = fr.betti(g, exact=True)
for field, vals in b.betti.items():
    print(f"reduced Betti over {field:>8}: {vals}")

# %%
# write the boundary matrices for use elsewhere
import tempfile, os

cc = fr.boundary_matrices(g)
out = tempfile.mkdtemp()
for k, D in enumerate(cc.boundaries, start=1):
    fr.write_matrix_market(D, os.path.join(out, f"d{k}.mtx"))
print("wrote", sorted(os.listdir(out)), "to", out)
