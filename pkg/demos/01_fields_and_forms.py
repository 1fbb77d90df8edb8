"""Finite fields, the alternating form, and projections onto orthogonal complements."""

# %%
import numpy as np

from sympframe import make_field, space, psi, project, circ
from sympframe.planes import canonical_plane

# GF(9): elements are integers 0..8, read as base-3 coefficient vectors
F9 = make_field(9)
print("GF(9) modulus (low degree first):", F9.modulus)
g = F9.element(F9.generator)
print("generator", g, "has order", next(e for e in range(1, 9) if (g ** e).index == 1))

# GF(4) = GF(2)[x]/(x^2+x+1); the class of x squares to x + 1
F4 = make_field(4)
x = F4.element(2)
print("in GF(4): x*x =", x * x, "= x + 1 ->", x + F4.element(1))

# %%
# V = GF(3)^6 with the standard form; e_1 pairs with e_4
sp = space(3, 3)
e = [sp.unit(i) for i in range(sp.dim)]
print("psi(e1, e4) =", psi(sp, e[0], e[3]), " psi(e1, e2) =", psi(sp, e[0], e[1]))

rng = np.random.default_rng(1)
v = sp.random_vector(rng)
print("psi(v, v) =", psi(sp, v, v))

# %%
# split a random vector along S = <e1, e4> and its complement
S = canonical_plane(sp, e[0], e[3])
vx, vy, vS = project(sp, v, S)
print("v =", v, " -> v_x =", vx, " v_y =", vy, " v_S =", vS)
print("v_S is orthogonal to S:", psi(sp, vS, S.w) == 0 and psi(sp, vS, S.u) == 0)

# the quantity that separates case 5 from case 6
W = canonical_plane(sp, sp.vector([1, 1, 0, 0, 2, 1]), sp.vector([0, 0, 0, 1, 0, 0]))
print("w o_S u =", circ(sp, S, W.w, W.u))
