import math

import numpy as np
import pytest

from lne import (
    EntropyParams,
    as_weights,
    escort,
    is_probability,
    is_subprobability,
    log_norm,
    majorizes,
    product_compose,
    robin_hood_transfer,
)


class TestWeightValidation:
    def test_accepts_lists_and_arrays(self):
        w = as_weights([0.3, 0.4])
        assert w.dtype == np.float64 and w.shape == (2,)

    @pytest.mark.parametrize(
        "bad", [[], [0.0, 0.0], [-0.1, 0.5], [np.nan, 1.0], [np.inf, 1.0], [[0.5, 0.5]]]
    )
    def test_rejects_invalid(self, bad):
        with pytest.raises(ValueError):
            as_weights(bad)

    def test_membership_predicates(self):
        assert is_probability([0.5, 0.5])
        assert is_probability([0.5, 0.5 + 5e-10])  # inside the mass tolerance
        assert not is_probability([0.25, 0.25])
        assert is_subprobability([0.25, 0.25])
        assert not is_subprobability([0.8, 0.7])


class TestEntropyParams:
    def test_validation(self):
        with pytest.raises(ValueError):
            EntropyParams(0.0, 1.0)
        with pytest.raises(ValueError):
            EntropyParams(1.0, -2.0)
        with pytest.raises(ValueError):
            EntropyParams(np.inf, 1.0)

    def test_equal_orders_window(self):
        assert EntropyParams(2.0, 2.0).equal_orders
        assert EntropyParams(2.0, 2.0 + 5e-9).equal_orders
        assert not EntropyParams(2.0, 2.0 + 1e-7).equal_orders


class TestLogNorm:
    def test_mass_at_order_one(self):
        assert log_norm([0.3, 0.4], 1.0) == pytest.approx(math.log(0.7), abs=1e-15)

    def test_three_four_five(self):
        # (0.6, 0.8) has unit 2-norm
        assert log_norm([0.6, 0.8], 2.0) == pytest.approx(0.0, abs=1e-15)

    def test_direct_evaluation(self):
        # oracle: (sum p^2)^(1/2) evaluated directly
        expected = 0.5 * math.log(0.75**2 + 0.25**2)
        assert log_norm([0.75, 0.25], 2.0) == pytest.approx(expected, abs=1e-15)
        assert expected == pytest.approx(-0.23500, abs=5e-6)

    def test_rejects_bad_order(self):
        for gamma in (0.0, -1.0, np.nan):
            with pytest.raises(ValueError):
                log_norm([0.5, 0.5], gamma)

    def test_zero_entries_do_not_contribute(self):
        assert log_norm([0.3, 0.0, 0.4], 1.0) == log_norm([0.3, 0.4], 1.0)

    def test_monotone_in_order(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            w = rng.uniform(0.01, 1.0, size=rng.integers(2, 8))
            values = [log_norm(w, g) for g in (0.1, 0.5, 1.0, 2.0, 5.0, 20.0, 100.0)]
            assert np.all(np.diff(values) <= 1e-12)

    def test_scaling_shift(self):
        rng = np.random.default_rng(8)
        for _ in range(20):
            w = rng.uniform(0.01, 1.0, size=5)
            c = 10.0 ** rng.uniform(-8, 8)
            g = rng.uniform(0.1, 50.0)
            lhs = log_norm(c * w, g)
            rhs = math.log(c) + log_norm(w, g)
            assert abs(lhs - rhs) <= 1e-12 * (1.0 + abs(rhs))

    def test_extreme_orders_stay_finite(self):
        w = [1e-12, 0.5, 1e-300]
        assert np.isfinite(log_norm(w, 100.0))
        assert log_norm(w, 1e4) == pytest.approx(math.log(0.5), abs=1e-3)


class TestEscort:
    def test_uniform_fixed_point(self):
        np.testing.assert_allclose(escort([0.25, 0.25], 3.0), [0.5, 0.5], atol=1e-15)

    def test_order_one_is_normalization(self):
        np.testing.assert_allclose(escort([0.3, 0.4], 1.0), [3 / 7, 4 / 7], atol=1e-15)

    def test_direct_arithmetic(self):
        np.testing.assert_allclose(escort([0.8, 0.2], 2.0), [16 / 17, 1 / 17], atol=1e-15)

    def test_sums_to_one_and_keeps_zeros(self):
        rng = np.random.default_rng(9)
        for _ in range(50):
            w = rng.uniform(0.0, 1.0, size=6)
            w[rng.integers(0, 6)] = 0.0
            if not w.any():
                continue
            beta = rng.uniform(0.05, 20.0)
            e = escort(w, beta)
            assert abs(e.sum() - 1.0) <= 1e-12
            np.testing.assert_array_equal(e == 0.0, w == 0.0)

    def test_idempotent_under_renormalization(self):
        e = escort([0.5, 0.3, 0.1], 2.5)
        np.testing.assert_allclose(escort(e, 1.0), e, atol=1e-12)

    def test_rejects_bad_beta(self):
        with pytest.raises(ValueError):
            escort([0.5, 0.5], 0.0)


class TestProductCompose:
    def test_identity_factor(self):
        np.testing.assert_allclose(product_compose([1.0], [0.5, 0.5]), [0.5, 0.5])

    def test_product_of_uniforms(self):
        np.testing.assert_allclose(product_compose([0.5, 0.5], [0.5, 0.5]), [0.25] * 4)

    def test_outer_product(self):
        np.testing.assert_allclose(
            product_compose([0.6, 0.4], [0.9, 0.1]), [0.54, 0.06, 0.36, 0.04]
        )

    def test_norm_product_rule(self):
        rng = np.random.default_rng(10)
        for _ in range(25):
            p = rng.uniform(0.01, 1.0, size=rng.integers(1, 5))
            q = rng.uniform(0.01, 1.0, size=rng.integers(1, 5))
            g = rng.uniform(0.1, 30.0)
            lhs = log_norm(product_compose(p, q), g)
            rhs = log_norm(p, g) + log_norm(q, g)
            assert abs(lhs - rhs) <= 1e-10


class TestRobinHood:
    def test_full_equalization(self):
        np.testing.assert_allclose(robin_hood_transfer([0.8, 0.2], 0, 1, 0.3), [0.5, 0.5])

    def test_no_strict_gap_errors(self):
        with pytest.raises(ValueError):
            robin_hood_transfer([0.5, 0.5], 0, 1, 0.1)

    def test_three_state_transfer(self):
        out = robin_hood_transfer([0.6, 0.3, 0.1], 0, 2, 0.1)
        np.testing.assert_allclose(out, [0.5, 0.3, 0.2], atol=1e-15)
        assert majorizes([0.6, 0.3, 0.1], out)
        assert not majorizes(out, [0.6, 0.3, 0.1])

    def test_rejects_overshoot_and_bad_indices(self):
        with pytest.raises(ValueError):
            robin_hood_transfer([0.8, 0.2], 0, 1, 0.31)
        with pytest.raises(ValueError):
            robin_hood_transfer([0.8, 0.2], 0, 1, 0.0)
        with pytest.raises(ValueError):
            robin_hood_transfer([0.8, 0.2], 0, 0, 0.1)
        with pytest.raises(ValueError):
            robin_hood_transfer([0.8, 0.2], 1, 0, 0.1)

    def test_mass_preserved_and_majorized(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            w = rng.uniform(0.01, 1.0, size=rng.integers(2, 7))
            i, j = np.argmax(w), np.argmin(w)
            if w[i] <= w[j]:
                continue
            amt = rng.uniform(0.0, 1.0) * (w[i] - w[j]) / 2
            if amt == 0.0:
                continue
            out = robin_hood_transfer(w, i, j, amt)
            assert abs(out.sum() - w.sum()) <= 1e-15
            assert majorizes(w, out)
