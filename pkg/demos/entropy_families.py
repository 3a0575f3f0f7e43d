"""Tour of the entropy families and what scale invariance buys.

Evaluates every family on a handful of weight vectors, then contrasts
how the classical measures move under rescaling while the logarithmic
norm entropy stays put.
"""

import numpy as np

from lne import (
    EntropyParams,
    aczel_daroczy,
    escort,
    kapur,
    lne,
    lne_min_entropy_limit,
    norm_entropy,
    renyi,
    shannon,
    tsallis,
)

vectors = {
    "uniform": np.array([0.25, 0.25, 0.25, 0.25]),
    "skewed": np.array([0.7, 0.2, 0.07, 0.03]),
    "near-degenerate": np.array([0.97, 0.01, 0.01, 0.01]),
}

print("=== values in nats, n = 4 states (max log 4 = %.4f) ===" % np.log(4))
header = f"{'vector':>16} {'shannon':>9} {'renyi2':>9} {'tsallis2':>9} {'kapur(3,2)':>11} {'AD(2)':>9} {'lne(2,1)':>9} {'lne(3,3)':>9}"
print(header)
for name, w in vectors.items():
    row = [
        float(shannon(w)),
        float(renyi(w, 2.0)),
        float(tsallis(w, 2.0)),
        float(kapur(w, 3.0, 2.0)),
        float(aczel_daroczy(w, 2.0)),
        float(lne(w, (2.0, 1.0))),
        float(lne(w, (3.0, 3.0))),
    ]
    print(f"{name:>16} " + " ".join(f"{v:9.4f}" for v in row[:4]) + f" {row[4]:9.4f} {row[5]:9.4f} {row[6]:9.4f}")

print()
print("=== rescaling the skewed vector by c = 0.2 (a sub-probability) ===")
w = vectors["skewed"]
c = 0.2
for label, fn in [
    ("shannon", lambda v: float(shannon(v))),
    ("renyi order 2", lambda v: float(renyi(v, 2.0))),
    ("norm entropy (2,1)", lambda v: float(norm_entropy(v, 2.0, 1.0))),
    ("lne (2,1)", lambda v: float(lne(v, (2.0, 1.0)))),
    ("lne (0.5,0.5)", lambda v: float(lne(v, (0.5, 0.5)))),
]:
    print(f"{label:>20}: E(P) = {fn(w):9.5f}   E(0.2 P) = {fn(c * w):9.5f}")
print("only the logarithmic norm entropy reads the same pattern at every scale")

print()
print("=== the escort view ===")
prm = EntropyParams(4.0, 2.0)
e = escort(w, prm.beta)
print("beta-escort of the skewed vector:", np.round(e, 5))
print(
    "lne(P; 4, 2) = %.6f  ==  renyi(escort(P, 2), 4/2) = %.6f"
    % (float(lne(w, prm)), float(renyi(e, prm.alpha / prm.beta)))
)

print()
print("=== order limits ===")
for alpha in (1e-6, 0.5, 1.0, 2.0, 10.0, 1e4):
    print(f"  lne(P; alpha={alpha:<8g}, beta=1) = {float(lne(w, (alpha, 1.0))):.6f}")
print("  alpha -> 0 recovers log n; alpha -> inf the scale-invariant min entropy:")
print(f"  min-entropy limit at beta=1: {float(lne_min_entropy_limit(w, 1.0)):.6f}")
