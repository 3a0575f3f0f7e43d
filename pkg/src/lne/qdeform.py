"""q-deformed logarithm and exponential.

    log_q(x) = (x^(1-q) - 1) / (1 - q),          x > 0
    exp_q(x) = [1 + (1-q) x]^(1/(1-q))           if the bracket is >= 0,
               0                                 otherwise,

both reducing to the classical log/exp as q -> 1.  The pair is mutually
inverse, exp_q(log_q(x)) = x, and obeys the deformed product rules

    exp_q(x) exp_q(y) = exp_q(x + y + (1-q) x y),
    log_q(x y) = log_q(x) + log_q(y) + (1-q) log_q(x) log_q(y).

Within EPS_ORDER of q = 1 the classical functions are used directly:
the deformed expressions lose ~8 digits there from the 1/(1-q) factor.
Elsewhere expm1/log1p formulations keep full precision.
"""

from __future__ import annotations

import numpy as np

from .numkit import EPS_ORDER

__all__ = ["q_log", "q_exp"]


def q_log(x, q):
    """Deformed logarithm log_q(x) for x > 0.

    Accepts scalars or arrays; scalar input returns a float.
    """
    q = float(q)
    if not np.isfinite(q):
        raise ValueError(f"q must be finite, got {q!r}")
    arr = np.asarray(x, dtype=float)
    if np.any(~np.isfinite(arr)) or np.any(arr <= 0):
        raise ValueError("q_log requires finite x > 0")
    if abs(1.0 - q) <= EPS_ORDER:
        out = np.log(arr)
    else:
        out = np.expm1((1.0 - q) * np.log(arr)) / (1.0 - q)
    return float(out) if np.isscalar(x) else out


def q_exp(x, q):
    """Deformed exponential exp_q(x), with the cutoff at a negative bracket.

    Total on the reals except the single pole case: when q > 1 the
    exponent 1/(1-q) is negative, so a bracket of exactly zero is a
    domain error rather than a silent 0.
    """
    q = float(q)
    if not np.isfinite(q):
        raise ValueError(f"q must be finite, got {q!r}")
    arr = np.asarray(x, dtype=float)
    if np.any(~np.isfinite(arr)):
        raise ValueError("q_exp requires finite x")
    if abs(1.0 - q) <= EPS_ORDER:
        out = np.exp(arr)
        return float(out) if np.isscalar(x) else out

    c = 1.0 - q
    flat = np.atleast_1d(arr)
    bracket = 1.0 + c * flat
    if np.any(bracket == 0.0) and c < 0:
        raise ValueError("q_exp pole: bracket is exactly 0 with q > 1")
    out = np.zeros_like(flat)
    pos = bracket > 0
    out[pos] = np.exp(np.log1p(c * flat[pos]) / c)
    out = out.reshape(arr.shape)
    return float(out) if np.isscalar(x) else out
