"""Which frame complexes does the spectral-gap argument make highly connected?"""

# %%
from fractions import Fraction

from sympframe import oracle

print("P_3(2) =", oracle.P(3, 2), " P_4(2) =", oracle.P(4, 2))
for q in (2, 3, 4):
    print(f"q={q}: lambda_min(3) = {oracle.lambda_min(3, q)}, threshold for the f-vector bound n >= {oracle.prop91_threshold(q)}")

# %%
print(" n  q=2  q=3  q=4   (half-n connectivity predicted)")
for n in range(3, 12):
    print(f"{n:2d}", *(f"{str(oracle.half_n_connected(n, q)):>4}" for q in (2, 3, 4)))

# %%
r = oracle.garland_report(4, 2)
print("n=4, q=2:", "Cohen-Macaulay prediction", r.cm_char0, "; rationally", r.rational_connectivity, "-connected")
