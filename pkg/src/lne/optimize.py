"""Constrained MaxEnt and minimum-cross-entropy solvers.

Constraints are normalized q-expectations with q = beta,

    <<g_r>>_beta = sum_i g_r(i) p_i^beta / sum_i p_i^beta = G_r,

i.e. ordinary means under the beta-escort distribution.  The stationary
distributions have the bracket forms

    maxent   p_i  ~  [1 + (a-b) sum_r l_r (g_r(i) - G_r)]^(1/(a-b)),
    minxent  p_i  ~  [q_i^(a-b) + (a-b) sum_r l_r (g_r(i) - G_r)]^(1/(a-b)),

collapsing at a == b to the exponential (Maxwell-Boltzmann-Gibbs) forms
p_i ~ exp(sum_r l_r (g_r(i) - G_r)) and q_i * exp(...).  States whose
bracket goes nonpositive are clamped to zero probability, mirroring the
q-exponential cutoff, and reported.

The multipliers are found by damped Newton iteration on the residual
system R_r(l) = <<g_r>>_beta(p(l)) - G_r with a forward-difference
Jacobian, halving backtracks on residual-norm increase, a start at
l = 0, and seeded random restarts on failure.  Everything is pure and
deterministic given the inputs and the config's seed.

`oracle_maxent` is an independent brute-force verifier: it enumerates
the probability simplex on a grid, filters near-feasible points, and
returns the entropy-maximizing survivor.  Test-scale only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import logsumexp

from .numkit import EPS_ORDER, EntropyParams, as_weights, escort

__all__ = [
    "InfeasibleError",
    "DegenerateConstraintError",
    "ConvergenceError",
    "ConstraintSet",
    "SolverConfig",
    "SolverReport",
    "MaxEntSolution",
    "normalized_q_expectation",
    "solve_maxent",
    "solve_minxent",
    "oracle_maxent",
]


class InfeasibleError(ValueError):
    """A target lies outside the reachable range of its utility."""


class DegenerateConstraintError(ValueError):
    """A constant utility vector: uninformative and Jacobian-singular."""


class ConvergenceError(RuntimeError):
    """All Newton starts failed; carries the best attempt for diagnosis."""

    def __init__(self, message, best):
        super().__init__(message)
        self.best = best
        self.report = best.report


@dataclass(frozen=True)
class ConstraintSet:
    """Tabulated utilities g (m rows over n states), targets G (length m),
    and the expectation index q (equal to beta at solve time)."""

    g: np.ndarray
    targets: np.ndarray
    q_index: float | None = None

    def __post_init__(self):
        g = np.asarray(self.g, dtype=float)
        if g.size == 0:
            g = g.reshape(0, 0)
        if g.ndim != 2:
            raise ValueError("g must be a list of m utility vectors over n states")
        t = np.asarray(self.targets, dtype=float).reshape(-1)
        if t.shape[0] != g.shape[0]:
            raise ValueError(f"{g.shape[0]} utilities but {t.shape[0]} targets")
        if g.size and not np.all(np.isfinite(g)):
            raise ValueError("g contains non-finite entries")
        if t.size and not np.all(np.isfinite(t)):
            raise ValueError("targets contain non-finite entries")
        for r in range(g.shape[0]):
            lo, hi = g[r].min(), g[r].max()
            if lo == hi:
                raise DegenerateConstraintError(
                    f"constraint {r} is constant ({lo}); it carries no information"
                )
            if not (lo < t[r] < hi):
                raise InfeasibleError(
                    f"target {r} = {t[r]} outside the open range ({lo}, {hi}) of g_{r}"
                )
        if self.q_index is not None:
            qi = float(self.q_index)
            if not np.isfinite(qi) or qi <= 0:
                raise ValueError(f"q_index must be a finite positive real, got {qi!r}")
            object.__setattr__(self, "q_index", qi)
        g.flags.writeable = False
        t.flags.writeable = False
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "targets", t)

    @property
    def m(self) -> int:
        return self.g.shape[0]

    @property
    def n(self) -> int:
        return self.g.shape[1]


_EMPTY = ConstraintSet(np.empty((0, 0)), np.empty(0))


@dataclass(frozen=True)
class SolverConfig:
    tol_residual: float = 1e-10
    max_iter: int = 200
    damping: float = 1.0
    fd_step: float = 1e-7
    restarts: int = 8
    seed: int = 0

    def __post_init__(self):
        for name in ("tol_residual", "damping", "fd_step"):
            v = getattr(self, name)
            if not (v > 0 and np.isfinite(v)):
                raise ValueError(f"{name} must be positive, got {v!r}")
        if int(self.max_iter) < 1:
            raise ValueError("max_iter must be >= 1")
        if int(self.restarts) < 0:
            raise ValueError("restarts must be >= 0")
        object.__setattr__(self, "max_iter", int(self.max_iter))
        object.__setattr__(self, "restarts", int(self.restarts))
        object.__setattr__(self, "seed", int(self.seed))


@dataclass(frozen=True)
class SolverReport:
    iterations: int
    final_residual_norm: float
    converged: bool
    restarts_used: int
    clamped_states: tuple = ()


@dataclass(frozen=True)
class MaxEntSolution:
    p: np.ndarray
    lambdas: np.ndarray
    Z: float
    branch: str
    report: SolverReport


def normalized_q_expectation(w, g, q) -> float:
    """Normalized q-expectation sum g w^q / sum w^q (the q-escort mean).

    Scale invariant in ``w``; the ordinary mean at q = 1 on probability
    vectors.
    """
    q = float(q)
    if not np.isfinite(q) or q <= 0:
        raise ValueError(f"q must be a finite positive real, got {q!r}")
    w = as_weights(w)
    g = np.asarray(g, dtype=float)
    if g.shape != w.shape:
        raise ValueError(f"g has shape {g.shape}, expected {w.shape}")
    return float(escort(w, q) @ g)


def _check_setup(n, constraints, params, cfg):
    n = int(n)
    if n < 1:
        raise ValueError("n must be a positive integer")
    cset = _EMPTY if constraints is None else constraints
    if not isinstance(cset, ConstraintSet):
        raise TypeError("constraints must be a ConstraintSet or None")
    if cset.m and cset.n != n:
        raise ValueError(f"constraints cover {cset.n} states, problem has {n}")
    if not isinstance(params, EntropyParams):
        params = EntropyParams(*params)
    if cset.q_index is not None and abs(cset.q_index - params.beta) > EPS_ORDER:
        raise ValueError(
            f"q_index {cset.q_index} must equal beta {params.beta} (the solver fixes q = beta)"
        )
    return n, cset, params, cfg or SolverConfig()


def _log_weights(lam, dg, d, log_prior):
    """Log of the unnormalized stationary weights at multipliers ``lam``.

    Returns (logw, clamped) where clamped marks states whose bracket is
    nonpositive (assigned zero probability).
    """
    s = lam @ dg if lam.size else np.zeros(dg.shape[1])
    if d is None:  # equal orders: exponential branch
        lw = s if log_prior is None else log_prior + s
        return lw, np.zeros(s.shape, dtype=bool)
    # bracket - 1, written to stay exact as d -> 0
    t = d * s if log_prior is None else np.expm1(d * log_prior) + d * s
    clamped = t <= -1.0
    safe = np.where(clamped, 0.0, t)
    lw = np.where(clamped, -np.inf, np.log1p(safe) / d)
    return lw, clamped


def _solve_lagrange(n, cset, params, cfg, log_prior):
    """Damped-Newton solve of the residual system; shared by both solvers."""
    alpha, beta = params.alpha, params.beta
    d = None if params.equal_orders else alpha - beta
    dg = cset.g - cset.targets[:, None]
    m = cset.m

    def residual(lam):
        lw, clamped = _log_weights(lam, dg, d, log_prior)
        norm = logsumexp(beta * lw)
        if not np.isfinite(norm):
            return None, lw, clamped
        e = np.exp(beta * lw - norm)
        return dg @ e, lw, clamped

    def attempt(lam):
        R, lw, clamped = residual(lam)
        if R is None:
            return lam, None, 0
        for it in range(1, cfg.max_iter + 1):
            if np.max(np.abs(R)) <= cfg.tol_residual:
                return lam, R, it - 1
            J = np.empty((m, m))
            for k in range(m):
                lp = lam.copy()
                lp[k] += cfg.fd_step
                Rk, _, _ = residual(lp)
                if Rk is None:
                    return lam, R, it - 1
                J[:, k] = (Rk - R) / cfg.fd_step
            try:
                step = np.linalg.solve(J, -R)
            except np.linalg.LinAlgError:
                return lam, R, it - 1
            norm0 = np.linalg.norm(R)
            t = cfg.damping
            improved = False
            while t > 1e-13:
                cand = lam + t * step
                Rc, _, _ = residual(cand)
                if Rc is not None and np.linalg.norm(Rc) < norm0:
                    lam, R = cand, Rc
                    improved = True
                    break
                t /= 2.0
            if not improved:
                return lam, R, it
        return lam, R, cfg.max_iter

    def bisect_fallback():
        # m == 1 only: the escort mean is nondecreasing in the single
        # multiplier, so a sign bracket plus bisection survives the flat
        # plateaus where clamping zeroes the Jacobian
        def f(x):
            R, _, _ = residual(np.array([x]))
            return None if R is None else float(R[0])

        v0 = f(0.0)
        if v0 is None:
            return None
        direction = 1.0 if v0 < 0 else -1.0
        lo, step = 0.0, 1.0
        hi = None
        for _ in range(80):
            cand = lo + direction * step
            v = f(cand)
            if v is None or v0 * v <= 0:
                hi = cand
                break
            lo, step = cand, step * 2.0
        if hi is None:
            return None
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if mid == lo or mid == hi:
                break
            v = f(mid)
            if v is not None and v0 * v > 0:
                lo = mid
            else:
                hi = mid
        flo, fhi = f(lo), f(hi)
        alo = abs(flo) if flo is not None else np.inf
        ahi = abs(fhi) if fhi is not None else np.inf
        return np.array([lo if alo <= ahi else hi])

    rng = np.random.default_rng(cfg.seed)
    best = None  # (res_norm, lam, R, iters, start_index)
    for start in range(cfg.restarts + 1):
        if start == 0:
            lam0 = np.zeros(m)
        else:
            lam0 = rng.standard_normal(m) * 0.5 * 2.0 ** ((start - 1) % 6)
        lam, R, iters = attempt(lam0)
        res_norm = np.inf if R is None else float(np.max(np.abs(R)))
        if best is None or res_norm < best[0]:
            best = (res_norm, lam, R, iters, start)
        if res_norm <= cfg.tol_residual:
            break

    if best[0] > cfg.tol_residual and m == 1:
        lam_b = bisect_fallback()
        if lam_b is not None:
            # polish the bisection point with one more Newton attempt
            lam, R, iters = attempt(lam_b)
            res_norm = np.inf if R is None else float(np.max(np.abs(R)))
            if res_norm < best[0]:
                best = (res_norm, lam, R, iters, cfg.restarts + 1)

    res_norm, lam, R, iters, start = best
    lw, clamped = _log_weights(lam, dg, d, log_prior)
    log_z = logsumexp(lw)
    p = np.exp(lw - log_z)
    converged = res_norm <= cfg.tol_residual
    report = SolverReport(
        iterations=iters,
        final_residual_norm=res_norm,
        converged=converged,
        restarts_used=start,
        clamped_states=tuple(int(i) for i in np.nonzero(clamped)[0]),
    )
    sol = MaxEntSolution(
        p=p,
        lambdas=lam.copy(),
        Z=float(np.exp(log_z)),
        branch="exponential" if params.equal_orders else "power_law",
        report=report,
    )
    if not converged:
        raise ConvergenceError(
            f"no convergence after {cfg.restarts + 1} starts "
            f"(best residual {res_norm:.3e} > tol {cfg.tol_residual:.3e})",
            sol,
        )
    return sol


def _trivial_solution(weights, params, branch):
    w = np.asarray(weights, dtype=float)
    z = float(w.sum())
    report = SolverReport(
        iterations=0, final_residual_norm=0.0, converged=True, restarts_used=0
    )
    return MaxEntSolution(
        p=w / z, lambdas=np.empty(0), Z=z, branch=branch, report=report
    )


def solve_maxent(n, constraints, params, cfg=None) -> MaxEntSolution:
    """Distribution over ``n`` states maximizing the logarithmic norm
    entropy subject to the normalized beta-expectation constraints.

    With no constraints the maximizer is exactly uniform.  Power-law
    branch for alpha != beta, exponential (MBG) branch on the diagonal.
    """
    n, cset, params, cfg = _check_setup(n, constraints, params, cfg)
    branch = "exponential" if params.equal_orders else "power_law"
    if cset.m == 0:
        return _trivial_solution(np.ones(n), params, branch)
    return _solve_lagrange(n, cset, params, cfg, None)


def solve_minxent(prior, constraints, params, cfg=None) -> MaxEntSolution:
    """Distribution minimizing the logarithmic norm cross-entropy against
    ``prior`` subject to the normalized beta-expectation constraints.

    With no constraints returns the normalized prior; with a uniform
    prior coincides with `solve_maxent` under the same constraints.
    """
    prior = as_weights(prior, "prior")
    n, cset, params, cfg = _check_setup(prior.size, constraints, params, cfg)
    if not params.equal_orders and params.alpha < params.beta and np.any(prior == 0):
        bad = np.nonzero(prior == 0)[0]
        raise ValueError(
            f"prior is zero on states {bad.tolist()}: the bracket form needs "
            "prior^(alpha-beta) with alpha < beta"
        )
    branch = "exponential" if params.equal_orders else "power_law"
    if cset.m == 0:
        return _trivial_solution(prior, params, branch)
    with np.errstate(divide="ignore"):
        log_prior = np.where(prior > 0, np.log(np.where(prior > 0, prior, 1.0)), -np.inf)
    return _solve_lagrange(n, cset, params, cfg, log_prior)


# ---------------------------------------------------------------------------
# Brute-force simplex oracle


def _composition_blocks(n, k, max_rows=1_500_000):
    """Yield blocks of all length-n compositions of k, in ascending
    lexicographic order, as integer arrays of at most ~max_rows rows."""
    if n == 1:
        yield np.array([[k]])
        return
    if n == 2:
        i = np.arange(k + 1)
        yield np.stack([i, k - i], axis=1)
        return
    if n == 3:
        counts = k + 1 - np.arange(k + 1)
        start = 0
        while start <= k:
            stop = start
            rows = 0
            while stop <= k and rows + counts[stop] <= max_rows:
                rows += counts[stop]
                stop += 1
            stop = max(stop, start + 1)
            c = counts[start:stop]
            i = np.repeat(np.arange(start, stop), c)
            off = np.repeat(np.cumsum(c) - c, c)
            j = np.arange(c.sum()) - off
            yield np.stack([i, j, k - i - j], axis=1)
            start = stop
        return
    if n == 4:
        for i in range(k + 1):
            for block in _composition_blocks(3, k - i, max_rows):
                lead = np.full((block.shape[0], 1), i)
                yield np.hstack([lead, block])
        return
    raise ValueError(f"oracle supports n <= 4, got {n}")


def _lne_rows(pts, alpha, beta, equal):
    """Row-wise entropy by the naive power-sum formulas (the whole point
    of the oracle is to be independent of the stable library path)."""
    pb = np.power(pts, beta).sum(axis=1)
    if equal:
        lp = np.where(pts > 0, np.log(np.where(pts > 0, pts, 1.0)), 0.0)
        ad = -(np.power(pts, beta) * lp).sum(axis=1) / pb
        return beta * ad + np.log(pb)
    pa = np.power(pts, alpha).sum(axis=1)
    return alpha * beta / (alpha - beta) * (np.log(pb) / beta - np.log(pa) / alpha)


def oracle_maxent(n, constraints, params, grid_step) -> np.ndarray:
    """Dense simplex search certifying `solve_maxent` at desk scale.

    Enumerates the n-state probability simplex at resolution
    ``grid_step`` (n <= 4, at most two constraints), keeps the points
    whose normalized beta-expectation residuals are all within
    10 * grid_step, and returns the entropy-maximizing survivor; ties
    within 1e-12 resolve to the lexicographically smallest point.
    """
    n, cset, params, _ = _check_setup(n, constraints, params, None)
    grid_step = float(grid_step)
    if not (1e-4 <= grid_step <= 1e-2):
        raise ValueError(f"grid_step must lie in [1e-4, 1e-2], got {grid_step}")
    if n > 4:
        raise ValueError(f"oracle supports n <= 4, got {n}")
    if cset.m > 2:
        raise ValueError(f"oracle supports at most 2 constraints, got {cset.m}")
    k = round(1.0 / grid_step)
    if math.comb(k + n - 1, n - 1) > 200_000_000:
        raise ValueError(f"grid of {math.comb(k + n - 1, n - 1)} points is too large")
    delta = 10.0 * grid_step
    beta = params.beta

    best_val = -np.inf
    best_row = None
    for block in _composition_blocks(n, k):
        pts = block / k
        if cset.m:
            pb = np.power(pts, beta)
            sb = pb.sum(axis=1)
            keep = np.ones(pts.shape[0], dtype=bool)
            for r in range(cset.m):
                em = (pb @ cset.g[r]) / sb
                keep &= np.abs(em - cset.targets[r]) <= delta
            pts = pts[keep]
        if pts.shape[0] == 0:
            continue
        vals = _lne_rows(pts, params.alpha, beta, params.equal_orders)
        top = vals.max()
        # generation is lexicographic, so the first row in the tie band
        # is the lexicographically smallest of this block
        cand = int(np.nonzero(vals >= top - 1e-12)[0][0])
        if vals[cand] > best_val + 1e-12:
            best_val = float(vals[cand])
            best_row = pts[cand].copy()
    if best_row is None:
        raise InfeasibleError(
            f"no grid point at step {grid_step} satisfies all residuals <= {delta}"
        )
    return best_row
