"""Entropy of a two-state system as its success probability sweeps [0, 1].

Reproduces the shape of the two-state family curves: every member is
zero at the endpoints, peaks at log 2 for the fair coin, and flattens
or sharpens as the orders move.  Writes the full grid to
bernoulli_curves.csv next to this script and prints a coarse table.
"""

import os

import numpy as np

from lne import lne

ALPHAS = [0.1, 0.5, 1.0, 2.0, 10.0, 100.0]
BETAS = [0.1, 0.5, 1.0, 2.0, 100.0]

grid = np.linspace(0.0, 1.0, 201)

out_path = os.path.join(os.path.dirname(__file__), "bernoulli_curves.csv")
with open(out_path, "w") as fh:
    fh.write("alpha,beta,p,value\n")
    for a in ALPHAS:
        for b in BETAS:
            for p in grid:
                v = float(lne([p, 1.0 - p], (a, b)))
                fh.write(f"{a},{b},{p:.3f},{v:.12g}\n")
print(f"wrote {len(ALPHAS) * len(BETAS) * grid.size} rows to {out_path}")

print()
print("coarse table for alpha = 2 (rows: p, columns: beta)")
print("   p | " + " ".join(f"b={b:<6g}" for b in BETAS))
for p in (0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0):
    vals = [float(lne([p, 1.0 - p], (2.0, b))) for b in BETAS]
    print(f"{p:4.2f} | " + " ".join(f"{v:8.5f}" for v in vals))

print()
print("checks visible in the numbers above:")
print("  endpoints are exactly 0, the midpoint is log 2 = %.6f," % np.log(2))
print("  and each column is symmetric about p = 0.5")
