"""Cross-entropy companion of the logarithmic norm entropy.

For weight vectors P, Q of equal length and equal total mass W,

    CE_{a,b}(P, Q) = a*b/(a-b) * [(1/a) log sum_i p_i^a q_i^(b-a)
                                   - log||P||_b],          a != b,
    CE_{b,b}(P, Q) = b * sum_i p_i^b log(p_i/q_i) / sum_i p_i^b
                     - b * log||P||_b.

The family is scale invariant in P, reduces to the Renyi directed
divergence of order a on probability vectors at b = 1, and against the
uniform prior satisfies CE(P, U) = b log(n/W) - E_{a,b}(P), which makes
its constrained minimizer the MaxEnt distribution (see `lne.optimize`).

Support convention: states with p_i = 0 never contribute; p_i > 0 with
q_i = 0 is a domain error whenever q_i carries a negative exponent
(a > b) or sits in a log ratio (a == b), and is silently dropped where
the exponent is positive.
"""

from __future__ import annotations

import math
import warnings

import numpy as np
from scipy.special import logsumexp

from .numkit import TOL_MASS, EntropyParams, as_weights, escort, log_norm
from .entropy import _as_params

__all__ = ["SupportError", "CrossEntropyValue", "lnce", "relative_entropy_bridge"]


class SupportError(ValueError):
    """The prior is zero on a state the first argument gives positive mass."""

    def __init__(self, index, message=None):
        self.index = int(index)
        super().__init__(message or f"support violation at state {index}: p > 0 but q = 0")


class CrossEntropyValue(float):
    """A float tagged with the order pair and the prior's total mass."""

    __slots__ = ("params", "prior_mass")

    def __new__(cls, value, params, prior_mass):
        obj = super().__new__(cls, value + 0.0)  # normalizes -0.0
        obj.params = params
        obj.prior_mass = float(prior_mass)
        return obj

    def __repr__(self):
        return (
            f"CrossEntropyValue({float(self)!r}, params={self.params!r}, "
            f"prior_mass={self.prior_mass!r})"
        )


def _check_masses(p, q, require_equal_mass):
    diff = abs(p.sum() - q.sum())
    if diff > TOL_MASS:
        msg = f"total masses differ: W(p)={p.sum()}, W(q)={q.sum()}"
        if require_equal_mass:
            raise ValueError(msg)
        warnings.warn(msg, stacklevel=3)


def lnce(p, q, params, require_equal_mass=True) -> CrossEntropyValue:
    """Logarithmic norm cross-entropy of ``p`` against the prior ``q``.

    The equal-mass precondition W(p) = W(q) is checked, never silently
    renormalized; pass ``require_equal_mass=False`` to demote the check
    to a warning (the formula itself is invariant to scaling of ``p``,
    so this is safe when probing that invariance).
    """
    prm = _as_params(params)
    p = as_weights(p, "p")
    q = as_weights(q, "q")
    if p.size != q.size:
        raise ValueError(f"length mismatch: {p.size} vs {q.size}")
    _check_masses(p, q, require_equal_mass)

    alpha, beta = prm.alpha, prm.beta
    psup = p > 0
    if (prm.equal_orders or alpha > beta) and np.any(psup & (q == 0)):
        raise SupportError(int(np.nonzero(psup & (q == 0))[0][0]))

    e = escort(p, beta)
    log_sum_pb = beta * log_norm(p, beta)
    if prm.equal_orders:
        ratio = np.log(p[psup]) - np.log(q[psup])
        val = beta * float(e[psup] @ ratio) - log_sum_pb
    else:
        both = psup & (q > 0)
        if not np.any(both):
            # alpha < beta with disjoint supports: the defining sum is
            # empty and the value diverges; refuse rather than return inf.
            raise SupportError(int(np.nonzero(psup)[0][0]))
        d = alpha - beta
        terms = np.log(e[both]) + d * (np.log(p[both]) - np.log(q[both]))
        val = (beta / d) * float(logsumexp(terms)) - log_sum_pb
    return CrossEntropyValue(val, prm, q.sum())


def relative_entropy_bridge(p, q, params, require_equal_mass=True) -> float:
    """Relative (beta, alpha)-entropy recovered from the cross-entropy via
    CE_{a,b}(P, Q) = a RE_{b,a}(P, Q) + b log||Q||_b."""
    prm = _as_params(params)
    ce = lnce(p, q, prm, require_equal_mass=require_equal_mass)
    return (float(ce) - prm.beta * log_norm(q, prm.beta)) / prm.alpha
