import math

import numpy as np
import pytest

from lne import q_exp, q_log


def test_qlog_fixed_points():
    assert q_log(1.0, -3.7) == 0.0
    assert q_log(1.0, 2.2) == 0.0
    assert q_log(math.e, 1.0) == pytest.approx(1.0, abs=1e-15)
    assert q_log(4.0, 0.0) == pytest.approx(3.0, abs=1e-15)


def test_qexp_fixed_points():
    assert q_exp(0.0, 5.0) == 1.0
    assert q_exp(-2.0, 0.0) == 0.0  # cutoff branch: bracket = -1
    assert q_exp(3.0, 0.0) == pytest.approx(4.0, abs=1e-15)


def test_qlog_domain():
    with pytest.raises(ValueError):
        q_log(0.0, 0.5)
    with pytest.raises(ValueError):
        q_log(-1.0, 0.5)
    with pytest.raises(ValueError):
        q_log([1.0, 0.0], 0.5)


def test_qexp_cutoff_boundary():
    # bracket exactly 0: q < 1 takes the cutoff value 0, q > 1 is a pole
    assert q_exp(-2.0, 0.5) == 0.0
    with pytest.raises(ValueError):
        q_exp(0.8, 2.25)  # 1 + (1 - 2.25) * 0.8 == 0 exactly
    # strictly negative bracket with q > 1 is still the cutoff
    assert q_exp(1.0, 2.25) == 0.0


def test_inverse_identity_grid():
    xs = np.linspace(0.05, 10.0, 80)
    for q in np.linspace(-2.0, 3.0, 26):
        back = q_exp(q_log(xs, q), q)
        assert np.max(np.abs(back - xs) / xs) <= 1e-10


def test_product_identities():
    rng = np.random.default_rng(3)
    checked = 0
    while checked < 200:
        q = rng.uniform(-2.0, 3.0)
        x, y = rng.uniform(0.1, 5.0, size=2)
        lx, ly = q_log(x, q), q_log(y, q)
        lhs = q_log(x * y, q)
        rhs = lx + ly + (1.0 - q) * lx * ly
        assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(lhs))
        u, v = rng.uniform(-0.5, 2.0, size=2)
        if min(1 + (1 - q) * u, 1 + (1 - q) * v) <= 1e-8:
            continue  # identity holds on the positive-bracket domain only
        lhs = q_exp(u, q) * q_exp(v, q)
        rhs = q_exp(u + v + (1.0 - q) * u * v, q)
        assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(rhs))
        checked += 1


def test_derivative_identities():
    h = 1e-6
    for q in (-1.5, -0.5, 0.0, 0.5, 1.3, 2.0):
        for x in np.linspace(0.3, 4.0, 12):
            num = (q_log(x + h, q) - q_log(x - h, q)) / (2 * h)
            assert abs(num - x**-q) <= 1e-5 * max(1.0, abs(x**-q))
        for u in np.linspace(-0.2, 1.5, 12):
            if 1 + (1 - q) * (u - h) <= 1e-3:
                continue  # stay inside the support
            num = (q_exp(u + h, q) - q_exp(u - h, q)) / (2 * h)
            val = q_exp(u, q) ** q
            assert abs(num - val) <= 1e-5 * max(1.0, abs(val))


def test_classical_limit_window():
    xs = np.linspace(0.05, 10.0, 50)
    for q in (1.0 - 1e-10, 1.0 + 1e-10):
        assert np.max(np.abs(q_log(xs, q) - np.log(xs))) <= 1e-8
        assert np.max(np.abs(q_exp(np.log(xs), q) - xs)) <= 1e-8


def test_array_and_scalar_round_trip():
    out = q_exp(np.array([-5.0, 0.0, 1.0]), 0.5)
    assert isinstance(out, np.ndarray) and out[0] == 0.0
    assert isinstance(q_exp(1.0, 0.5), float)
    assert isinstance(q_log(2.0, 0.5), float)
