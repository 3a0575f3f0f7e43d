"""Self-contained invariant suite behind the ``lne check`` subcommand.

Each check draws its own seeded randomness, returns (name, ok, detail),
and runs in well under a second; the CLI stops at the first failure.
"""

from __future__ import annotations

import math

import numpy as np

from .numkit import EntropyParams, escort, log_norm, product_compose
from .qdeform import q_exp, q_log
from .entropy import lne, renyi, shannon
from .crossent import lnce
from .optimize import ConstraintSet, SolverConfig, solve_maxent, solve_minxent

__all__ = ["run_checks", "CHECKS"]


def _random_weights(rng, n, positive=True):
    w = rng.uniform(0.05 if positive else 0.0, 1.0, size=n)
    return w / w.sum() * rng.uniform(0.2, 1.0)


def _params_grid():
    orders = [0.25, 0.5, 1.0, 2.0, 4.0]
    return [EntropyParams(a, b) for a in orders for b in orders]


def check_scale_invariance(seed, tol):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(100):
        w = _random_weights(rng, rng.integers(2, 8))
        prm = EntropyParams(*rng.uniform(0.1, 5.0, size=2))
        c = 10.0 ** rng.uniform(-6, 2)
        e0, e1 = lne(w, prm), lne(c * w, prm)
        worst = max(worst, abs(e1 - e0) / (1.0 + abs(e0)))
    return worst <= 1e-9, f"max relative drift {worst:.3e}"


def check_escort_identity(seed, tol):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(100):
        w = _random_weights(rng, rng.integers(2, 8))
        beta = rng.uniform(0.2, 3.0)
        ratio = math.exp(rng.uniform(math.log(1e-3), math.log(20.0)))
        alpha = beta * (1.0 + ratio) if rng.random() < 0.5 else beta * ratio
        if abs(alpha / beta - 1.0) < 1e-5:
            alpha = beta
        prm = EntropyParams(alpha, beta)
        direct = lne(w, prm)
        via_escort = renyi(escort(w, beta), alpha / beta)
        worst = max(worst, abs(direct - via_escort))
    return worst <= 1e-9, f"max identity gap {worst:.3e}"


def check_extremes(seed, tol):
    for n in range(2, 21):
        u = np.full(n, 1.0 / n)
        for prm in _params_grid():
            if abs(lne(u, prm) - math.log(n)) > 1e-12:
                return False, f"uniform n={n} missed log(n) at {prm}"
    for prm in _params_grid():
        if lne([0.0, 0.7, 0.0], prm) != 0.0:
            return False, f"degenerate vector not exactly 0 at {prm}"
    rng = np.random.default_rng(seed)
    for _ in range(100):
        n = int(rng.integers(2, 10))
        w = rng.uniform(0.01, 1.0, size=n)
        w /= w.sum()
        if np.allclose(w, 1.0 / n):
            continue
        v = lne(w, EntropyParams(*rng.uniform(0.1, 4.0, size=2)))
        if not (0.0 < v < math.log(n)):
            return False, f"value {v} outside (0, log {n})"
    return True, "uniform/degenerate/interior extremes all in range"


def check_composition(seed, tol):
    rng = np.random.default_rng(seed)
    for _ in range(50):
        p = _random_weights(rng, rng.integers(2, 6))
        q = _random_weights(rng, rng.integers(2, 6))
        prm = EntropyParams(*rng.uniform(0.1, 4.0, size=2))
        lhs = lne(product_compose(p, q), prm)
        rhs = lne(p, prm) + lne(q, prm)
        if abs(lhs - rhs) > 1e-9:
            return False, f"extensivity gap {abs(lhs - rhs):.3e} at {prm}"
        grown = lne(np.append(p, 0.0), prm)
        if abs(grown - lne(p, prm)) > 1e-12:
            return False, "appending a zero state moved the entropy"
    return True, "extensivity and expandability hold"


def check_qdeform(seed, tol):
    xs = np.linspace(0.05, 10.0, 40)
    for q in np.linspace(-2.0, 3.0, 21):
        back = q_exp(q_log(xs, q), q)
        if np.max(np.abs(back - xs) / xs) > 1e-10:
            return False, f"inverse identity fails at q={q}"
        x, y = 2.5, 0.8
        # the product identity lives on the positive-bracket domain
        if min(1 + (1 - q) * x, 1 + (1 - q) * y) <= 1e-6:
            continue
        lhs = q_exp(x, q) * q_exp(y, q)
        rhs = q_exp(x + y + (1 - q) * x * y, q)
        if abs(lhs - rhs) > 1e-10 * max(1.0, abs(rhs)):
            return False, f"product identity fails at q={q}"
    return True, "inverse and product identities hold"


def check_cross_entropy(seed, tol):
    rng = np.random.default_rng(seed)
    for _ in range(50):
        n = int(rng.integers(2, 7))
        p = rng.uniform(0.05, 1.0, size=n)
        p /= p.sum()
        q = rng.uniform(0.05, 1.0, size=n)
        q /= q.sum()
        alpha = rng.uniform(0.2, 4.0)
        if abs(alpha - 1.0) < 1e-3:
            alpha = 2.0
        ce = lnce(p, q, EntropyParams(alpha, 1.0))
        div = math.log(float(np.sum(p**alpha * q ** (1.0 - alpha)))) / (alpha - 1.0)
        if abs(ce - div) > 1e-10:
            return False, f"beta=1 reduction gap {abs(ce - div):.3e}"
        prm = EntropyParams(alpha, rng.uniform(0.2, 3.0))
        u = np.full(n, 1.0 / n)
        lhs = lnce(p, u, prm)
        rhs = prm.beta * math.log(n) - lne(p, prm)
        if abs(lhs - rhs) > 1e-9:
            return False, f"uniform-prior identity gap {abs(lhs - rhs):.3e}"
    return True, "beta=1 reduction and uniform-prior identity hold"


def check_solvers(seed, tol):
    cfg = SolverConfig(tol_residual=min(tol, 1e-10), seed=seed)
    cset = ConstraintSet([[0.0, 1.0, 2.0]], [0.8])
    for prm in (EntropyParams(2.0, 1.0), EntropyParams(1.0, 1.0), EntropyParams(0.5, 2.0)):
        sol = solve_maxent(3, cset, prm, cfg)
        e = escort(sol.p, prm.beta)
        if abs(float(e @ cset.g[0]) - 0.8) > 1e-10:
            return False, f"constraint residual too large at {prm}"
        dual = solve_minxent(np.full(3, 1 / 3), cset, prm, cfg)
        if np.max(np.abs(dual.p - sol.p)) > 1e-8:
            return False, f"uniform-prior duality gap at {prm}"
        if not prm.equal_orders:
            pt = sol.p / math.exp(log_norm(sol.p, prm.beta))
            lhs = pt ** (prm.alpha - prm.beta) / np.sum(pt**prm.alpha)
            rhs = 1 + (prm.alpha - prm.beta) * sol.lambdas @ (cset.g - 0.8)
            if np.max(np.abs(lhs - rhs)) > 1e-8:
                return False, f"stationarity plug-back gap at {prm}"
        else:
            h = sol.lambdas @ cset.g
            fit = np.polyfit(h, np.log(sol.p), 1)
            if np.max(np.abs(np.log(sol.p) - np.polyval(fit, h))) > 1e-10:
                return False, "MBG log-probabilities not affine in the constraint"
    quiet = solve_maxent(5, None, EntropyParams(3.0, 0.5), cfg)
    if np.max(np.abs(quiet.p - 0.2)) != 0.0:
        return False, "unconstrained maximizer is not exactly uniform"
    if shannon(quiet.p) <= 0:
        return False, "uniform entropy not positive"
    return True, "residuals, duality, stationarity, MBG form all pass"


CHECKS = [
    ("scale_invariance", check_scale_invariance),
    ("escort_identity", check_escort_identity),
    ("extremes", check_extremes),
    ("composition", check_composition),
    ("qdeform_identities", check_qdeform),
    ("cross_entropy", check_cross_entropy),
    ("solvers", check_solvers),
]


def run_checks(seed=0, tol=1e-10):
    """Run every invariant check; yields (name, ok, detail) in order."""
    for name, fn in CHECKS:
        ok, detail = fn(seed, tol)
        yield name, bool(ok), detail
