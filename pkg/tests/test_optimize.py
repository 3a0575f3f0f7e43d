import math

import numpy as np
import pytest

from lne import (
    ConstraintSet,
    ConvergenceError,
    DegenerateConstraintError,
    EntropyParams,
    InfeasibleError,
    SolverConfig,
    escort,
    lne,
    log_norm,
    normalized_q_expectation,
    oracle_maxent,
    solve_maxent,
    solve_minxent,
)

CFG = SolverConfig()


def residuals(sol, cset, beta):
    e = escort(sol.p, beta)
    return np.array([abs(float(e @ g) - t) for g, t in zip(cset.g, cset.targets)])


class TestNormalizedQExpectation:
    def test_uniform_symmetry(self):
        for q in (0.5, 1.0, 3.0):
            v = normalized_q_expectation([1 / 3] * 3, [0.0, 1.0, 2.0], q)
            assert v == pytest.approx(1.0, abs=1e-13)

    def test_ordinary_mean_at_q_one(self):
        assert normalized_q_expectation([0.8, 0.2], [0.0, 1.0], 1.0) == pytest.approx(0.2)

    def test_escort_mean(self):
        v = normalized_q_expectation([0.8, 0.2], [0.0, 1.0], 2.0)
        assert v == pytest.approx(0.04 / 0.68, abs=1e-13)

    def test_scale_invariant(self):
        v1 = normalized_q_expectation([0.8, 0.2], [0.0, 1.0], 2.0)
        v2 = normalized_q_expectation([8.0, 2.0], [0.0, 1.0], 2.0)
        assert v1 == pytest.approx(v2, abs=1e-14)

    def test_rejects_bad_q(self):
        with pytest.raises(ValueError):
            normalized_q_expectation([0.5, 0.5], [0.0, 1.0], 0.0)


class TestConstraintValidation:
    def test_constant_g_distinct_error(self):
        with pytest.raises(DegenerateConstraintError):
            ConstraintSet([[1.0, 1.0, 1.0]], [1.0])

    def test_target_outside_range(self):
        with pytest.raises(InfeasibleError):
            ConstraintSet([[0.0, 1.0, 2.0]], [2.5])
        with pytest.raises(InfeasibleError):
            ConstraintSet([[0.0, 1.0, 2.0]], [0.0])  # boundary is not interior

    def test_q_index_must_match_beta(self):
        cset = ConstraintSet([[0.0, 1.0]], [0.4], q_index=1.0)
        solve_maxent(2, cset, (2.0, 1.0), CFG)
        with pytest.raises(ValueError, match="q_index"):
            solve_maxent(2, cset, (2.0, 2.0), CFG)

    def test_shape_mismatches(self):
        with pytest.raises(ValueError):
            ConstraintSet([[0.0, 1.0]], [0.4, 0.5])
        with pytest.raises(ValueError):
            solve_maxent(3, ConstraintSet([[0.0, 1.0]], [0.4]), (2.0, 1.0), CFG)

    def test_solver_config_validation(self):
        with pytest.raises(ValueError):
            SolverConfig(tol_residual=0.0)
        with pytest.raises(ValueError):
            SolverConfig(max_iter=0)


class TestMaxEnt:
    def test_unconstrained_is_exactly_uniform(self):
        sol = solve_maxent(5, None, (1.7, 0.4), CFG)
        np.testing.assert_array_equal(sol.p, np.full(5, 0.2))
        assert sol.branch == "power_law" and sol.Z == 5.0
        assert sol.lambdas.size == 0 and sol.report.converged

    def test_target_at_uniform_mean_gives_uniform(self):
        cset = ConstraintSet([[0.0, 1.0, 2.0]], [1.0])
        sol = solve_maxent(3, cset, (1.0, 1.0), CFG)
        np.testing.assert_allclose(sol.p, 1 / 3, atol=1e-12)
        assert abs(sol.lambdas[0]) <= 1e-10
        assert sol.branch == "exponential"

    def test_derived_case_analytic_and_oracle(self):
        # alpha=2, beta=1: the stationary distribution is affine in g and
        # solvable by hand: p = (13, 10, 7)/30
        cset = ConstraintSet([[0.0, 1.0, 2.0]], [0.8])
        prm = EntropyParams(2.0, 1.0)
        sol = solve_maxent(3, cset, prm, CFG)
        np.testing.assert_allclose(sol.p, np.array([13.0, 10.0, 7.0]) / 30.0, atol=1e-12)
        assert residuals(sol, cset, 1.0).max() <= 1e-10
        oracle = oracle_maxent(3, cset, prm, 1.5e-4)
        assert np.max(np.abs(oracle - sol.p)) <= 1e-2
        assert abs(float(lne(oracle, prm)) - float(lne(sol.p, prm))) <= 1e-3

    def test_plug_back_stationarity(self):
        rng = np.random.default_rng(40)
        for a, b in ((2.0, 1.0), (1.0, 2.0), (3.0, 0.5), (0.7, 1.3)):
            prm = EntropyParams(a, b)
            n = int(rng.integers(3, 6))
            g = rng.uniform(0.0, 1.0, size=n)
            g = (g - g.min()) / (g.max() - g.min())
            target = float(g.mean() + rng.uniform(-0.05, 0.05))
            cset = ConstraintSet([g], [target])
            sol = solve_maxent(n, cset, prm, CFG)
            pt = sol.p / math.exp(log_norm(sol.p, b))
            lhs = pt ** (a - b) / np.sum(pt**a)
            rhs = 1.0 + (a - b) * (sol.lambdas @ (cset.g - target))
            assert np.max(np.abs(lhs - rhs)) <= 1e-8

    def test_mbg_branch_collinearity(self):
        rng = np.random.default_rng(41)
        for b in (0.5, 1.0, 2.0):
            n = 4
            g = rng.uniform(0.0, 2.0, size=n)
            g = (g - g.min()) / (g.max() - g.min())
            cset = ConstraintSet([g], [float(g.mean() - 0.07)])
            sol = solve_maxent(n, cset, (b, b), CFG)
            assert sol.branch == "exponential"
            h = sol.lambdas @ cset.g
            coef = np.polyfit(h, np.log(sol.p), 1)
            resid = np.log(sol.p) - np.polyval(coef, h)
            assert np.max(np.abs(resid)) <= 1e-10

    def test_branch_limit_continuity(self):
        cset = ConstraintSet([[0.0, 0.4, 1.0]], [0.55])
        for b in (0.5, 1.0, 2.0):
            near = solve_maxent(3, cset, (b + 1e-6, b), CFG)
            diag = solve_maxent(3, cset, (b, b), CFG)
            assert near.branch == "power_law" and diag.branch == "exponential"
            assert np.max(np.abs(near.p - diag.p)) <= 1e-4

    def test_two_constraints(self):
        g1 = [0.0, 1.0, 2.0, 3.0]
        g2 = [1.0, 0.0, 1.0, 0.0]
        cset = ConstraintSet([g1, g2], [1.4, 0.55])
        prm = EntropyParams(2.0, 1.0)
        sol = solve_maxent(4, cset, prm, CFG)
        assert residuals(sol, cset, 1.0).max() <= 1e-10
        pt = sol.p / math.exp(log_norm(sol.p, 1.0))
        lhs = pt / np.sum(pt**2.0)
        rhs = 1.0 + sol.lambdas @ (cset.g - cset.targets[:, None])
        assert np.max(np.abs(lhs - rhs)) <= 1e-8
        # the coarse n=4 oracle (residual band 0.1) only sanity-checks:
        # its relaxed feasible set can beat the exact solver by O(band)
        oracle = oracle_maxent(4, cset, prm, 1e-2)
        assert np.max(np.abs(oracle - sol.p)) <= 5e-2
        assert abs(float(lne(sol.p, prm)) - float(lne(oracle, prm))) <= 5e-2

    def test_clamped_states_reported(self):
        # an extreme target pushes the smallest bracket through zero
        cset = ConstraintSet([[0.0, 1.0, 2.0]], [1.9])
        sol = solve_maxent(3, cset, (3.0, 1.0), CFG)
        assert residuals(sol, cset, 1.0).max() <= 1e-10
        assert sol.p[0] == 0.0
        assert 0 in sol.report.clamped_states

    def test_non_convergence_carries_best_report(self):
        # two constraints (no scalar fallback) and a one-iteration budget
        cset = ConstraintSet([[0.0, 1.0, 2.0, 3.0], [1.0, 0.0, 1.0, 0.0]], [2.1, 0.3])
        tiny = SolverConfig(max_iter=1, restarts=0, damping=1e-9)
        with pytest.raises(ConvergenceError) as exc:
            solve_maxent(4, cset, (2.0, 1.0), tiny)
        assert exc.value.report.converged is False
        assert exc.value.best.p.shape == (4,)
        assert exc.value.report.final_residual_norm > 1e-10


class TestMinXEnt:
    def test_no_constraints_returns_normalized_prior(self):
        sol = solve_minxent([0.3, 0.7], None, (1.3, 2.2), CFG)
        np.testing.assert_allclose(sol.p, [0.3, 0.7], atol=1e-15)
        sol = solve_minxent([3.0, 7.0], None, (1.0, 1.0), CFG)
        np.testing.assert_allclose(sol.p, [0.3, 0.7], atol=1e-15)

    def test_uniform_prior_duality(self):
        rng = np.random.default_rng(42)
        for a, b in ((2.0, 1.0), (1.0, 2.0), (0.5, 0.5), (3.0, 0.5), (1.0, 1.0)):
            n = int(rng.integers(2, 6))
            g = rng.uniform(0.0, 1.0, size=n)
            if g.max() == g.min():
                continue
            g = (g - g.min()) / (g.max() - g.min())
            cset = ConstraintSet([g], [float(g.mean() + rng.uniform(-0.08, 0.08))])
            maxent = solve_maxent(n, cset, (a, b), CFG)
            minxent = solve_minxent(np.full(n, 1.0 / n), cset, (a, b), CFG)
            assert np.max(np.abs(maxent.p - minxent.p)) <= 1e-8

    def test_exponential_tilt_against_bisection(self):
        # alpha = beta = 1: p ~ prior * exp(lam * (g - G)) with the scalar
        # lam fixed by the plain mean; bisect the monotone residual
        prior = np.array([0.7, 0.2, 0.1])
        g = np.array([0.0, 1.0, 2.0])
        target = 1.0
        cset = ConstraintSet([g], [target])
        sol = solve_minxent(prior, cset, (1.0, 1.0), CFG)

        def mean_resid(lam):
            w = prior * np.exp(lam * (g - target))
            p = w / w.sum()
            return float(g @ p) - target

        lo, hi = -50.0, 50.0
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if mean_resid(mid) < 0:
                lo = mid
            else:
                hi = mid
        lam = 0.5 * (lo + hi)
        w = prior * np.exp(lam * (g - target))
        np.testing.assert_allclose(sol.p, w / w.sum(), atol=1e-9)
        assert float(g @ sol.p) == pytest.approx(target, abs=1e-10)

    def test_prior_zero_rejected_when_alpha_below_beta(self):
        cset = ConstraintSet([[0.0, 1.0, 2.0]], [1.2])
        with pytest.raises(ValueError, match="prior is zero"):
            solve_minxent([0.5, 0.0, 0.5], cset, (1.0, 2.0), CFG)
        # alpha > beta tolerates prior zeros
        sol = solve_minxent([0.5, 0.0, 0.5], cset, (2.0, 1.0), CFG)
        assert residuals(sol, cset, 1.0).max() <= 1e-10


class TestOracle:
    def test_unconstrained_near_uniform(self):
        o = oracle_maxent(3, None, EntropyParams(2.0, 1.0), 1e-3)
        assert np.max(np.abs(o - 1 / 3)) <= 2e-3

    def test_rejects_out_of_range_target(self):
        with pytest.raises(InfeasibleError):
            oracle_maxent(3, ConstraintSet([[0.0, 1.0, 2.0]], [5.0]), (2.0, 1.0), 1e-3)

    def test_infeasible_after_filtering(self):
        # jointly unreachable pair of targets that each pass the
        # componentwise interior check
        cset = ConstraintSet([[0.0, 1.0], [1.0, 0.0]], [0.9, 0.9])
        with pytest.raises(InfeasibleError):
            oracle_maxent(2, cset, EntropyParams(2.0, 1.0), 1e-3)

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            oracle_maxent(3, None, (2.0, 1.0), 1e-5)
        with pytest.raises(ValueError):
            oracle_maxent(5, None, (2.0, 1.0), 1e-2)
        with pytest.raises(ValueError):
            oracle_maxent(
                3,
                ConstraintSet([[0.0, 1.0, 2.0]] * 3, [0.5, 0.6, 0.7]),
                (2.0, 1.0),
                1e-2,
            )

    def test_deterministic_tie_break(self):
        a = oracle_maxent(3, None, EntropyParams(1.0, 1.0), 2e-3)
        b = oracle_maxent(3, None, EntropyParams(1.0, 1.0), 2e-3)
        np.testing.assert_array_equal(a, b)
        # k = 500 is not divisible by 3: the lexicographically smallest
        # of the tied near-uniform points wins
        assert a[0] <= a[1] and a[0] <= a[2]

    def test_four_states(self):
        o = oracle_maxent(4, None, EntropyParams(2.0, 1.0), 1e-2)
        assert np.max(np.abs(o - 0.25)) <= 1e-2


class TestDeterminism:
    def test_same_seed_same_solution(self):
        cset = ConstraintSet([[0.0, 0.3, 1.0]], [0.35])
        a = solve_maxent(3, cset, (3.0, 0.5), SolverConfig(seed=7))
        b = solve_maxent(3, cset, (3.0, 0.5), SolverConfig(seed=7))
        np.testing.assert_array_equal(a.p, b.p)
        np.testing.assert_array_equal(a.lambdas, b.lambdas)
        assert a.report == b.report
