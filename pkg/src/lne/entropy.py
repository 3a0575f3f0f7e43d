"""Entropy functionals on finite weight vectors.

The classical one- and two-parameter families (Shannon, Renyi, Tsallis,
Kapur, norm entropy, Aczel-Daroczy) together with the two-parameter
logarithmic norm entropy

    E_{a,b}(P) = a*b/(a-b) * [log||P||_b - log||P||_a],   a != b,
    E_{b,b}(P) = b * [AD_b(P) + log||P||_b],

which is scale invariant (E(cP) = E(P) for c > 0), symmetric in (a, b),
ranges over [0, log n], and equals the Renyi entropy of order a/b of the
b-escort distribution.  All values are in nats.

Order pairs within EPS_ORDER of the diagonal dispatch to the limiting
a == b form; the (a - b) denominator loses roughly eight digits there.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.special import logsumexp

from .numkit import (
    EPS_ORDER,
    TOL_MASS,
    EntropyParams,
    as_weights,
    escort,
    is_probability,
    log_norm,
)

__all__ = [
    "EntropyValue",
    "shannon",
    "renyi",
    "tsallis",
    "kapur",
    "norm_entropy",
    "aczel_daroczy",
    "lne",
    "lne_min_entropy_limit",
    "gm_subadditivity_rhs",
]


class EntropyValue(float):
    """A float tagged with the family and order parameters that produced it."""

    __slots__ = ("family", "params")

    def __new__(cls, value, family, params=()):
        obj = super().__new__(cls, value + 0.0)  # normalizes -0.0
        obj.family = family
        obj.params = tuple(float(p) for p in params)
        return obj

    def __repr__(self):
        return f"EntropyValue({float(self)!r}, family={self.family!r}, params={self.params!r})"


def _as_params(params) -> EntropyParams:
    if isinstance(params, EntropyParams):
        return params
    alpha, beta = params
    return EntropyParams(alpha, beta)


def _shannon_of_probability(u) -> float:
    pos = u[u > 0]
    return float(-(pos * np.log(pos)).sum())


def shannon(w) -> EntropyValue:
    """Shannon entropy, -(1/W) sum_i w_i log w_i with W the total mass.

    Coincides with -sum p log p on probability vectors.  Note this is
    not the entropy of the mass-normalized vector: on sub-probabilities
    it differs from it by -log W and is not scale invariant.
    """
    w = as_weights(w)
    mass = w.sum()
    u = w / mass
    return EntropyValue(_shannon_of_probability(u) - math.log(mass), "shannon")


def renyi(w, alpha) -> EntropyValue:
    """Renyi entropy of order alpha, (1/(1-alpha)) log[sum w^alpha / sum w].

    Orders within EPS_ORDER of 1 route to the Shannon limit.
    """
    alpha = float(alpha)
    if not np.isfinite(alpha) or alpha <= 0:
        raise ValueError(f"alpha must be a finite positive real, got {alpha!r}")
    w = as_weights(w)
    if abs(alpha - 1.0) <= EPS_ORDER:
        return EntropyValue(shannon(w), "renyi", (alpha,))
    mass = w.sum()
    u = w / mass
    lsum = logsumexp(alpha * np.log(u[u > 0]))
    return EntropyValue(lsum / (1.0 - alpha) - math.log(mass), "renyi", (alpha,))


def tsallis(w, q) -> EntropyValue:
    """Tsallis entropy (1 - sum p^q)/(q - 1) of a probability vector.

    Defined here only on probability vectors; q within EPS_ORDER of 1
    routes to the Shannon limit.  Equals -sum p^q log_q(p).
    """
    q = float(q)
    if not np.isfinite(q):
        raise ValueError(f"q must be finite, got {q!r}")
    w = as_weights(w)
    if not is_probability(w):
        raise ValueError(f"tsallis entropy requires a probability vector, mass={w.sum()}")
    if abs(q - 1.0) <= EPS_ORDER:
        return EntropyValue(shannon(w), "tsallis", (q,))
    pos = w[w > 0]
    s = float(np.exp(q * np.log(pos)).sum())
    return EntropyValue((1.0 - s) / (q - 1.0), "tsallis", (q,))


def kapur(w, alpha, beta) -> EntropyValue:
    """Kapur entropy of order alpha and type beta,
    (1/(alpha-beta)) log[sum w^beta / sum w^alpha].

    Undefined on the diagonal; pairs within EPS_ORDER of alpha == beta
    are rejected (the limit is the Aczel-Daroczy entropy).
    """
    alpha, beta = float(alpha), float(beta)
    for name, v in (("alpha", alpha), ("beta", beta)):
        if not np.isfinite(v) or v <= 0:
            raise ValueError(f"{name} must be a finite positive real, got {v!r}")
    if abs(alpha - beta) <= EPS_ORDER:
        raise ValueError("kapur entropy needs alpha != beta; use aczel_daroczy for the limit")
    w = as_weights(w)
    logp = np.log(w[w > 0])
    val = (logsumexp(beta * logp) - logsumexp(alpha * logp)) / (alpha - beta)
    return EntropyValue(val, "kapur", (alpha, beta))


def norm_entropy(w, alpha, beta) -> EntropyValue:
    """The (alpha, beta)-norm entropy,
    alpha*beta/(alpha-beta) * [||w||_beta - ||w||_alpha].

    Symmetric in (alpha, beta); rejects the diagonal like `kapur`.
    """
    alpha, beta = float(alpha), float(beta)
    for name, v in (("alpha", alpha), ("beta", beta)):
        if not np.isfinite(v) or v <= 0:
            raise ValueError(f"{name} must be a finite positive real, got {v!r}")
    if abs(alpha - beta) <= EPS_ORDER:
        raise ValueError("norm entropy needs alpha != beta; its scaled limit is aczel_daroczy")
    w = as_weights(w)
    val = (
        alpha
        * beta
        / (alpha - beta)
        * (math.exp(log_norm(w, beta)) - math.exp(log_norm(w, alpha)))
    )
    return EntropyValue(val, "norm", (alpha, beta))


def aczel_daroczy(w, beta) -> EntropyValue:
    """Aczel-Daroczy entropy, -sum w^beta log w / sum w^beta.

    The common alpha -> beta limit of the Kapur and (scaled) norm
    entropies; beta = 1 gives Shannon on probability vectors.
    """
    beta = float(beta)
    if not np.isfinite(beta) or beta <= 0:
        raise ValueError(f"beta must be a finite positive real, got {beta!r}")
    w = as_weights(w)
    e = escort(w, beta)
    pos = w > 0
    return EntropyValue(-float(e[pos] @ np.log(w[pos])), "aczel_daroczy", (beta,))


def lne(w, params) -> EntropyValue:
    """Logarithmic norm entropy with orders (alpha, beta).

    ``params`` is an EntropyParams or an (alpha, beta) pair.  Pairs on
    the diagonal (within EPS_ORDER) use the limiting form
    beta * [AD_beta + log||w||_beta].
    """
    p = _as_params(params)
    w = as_weights(w)
    if p.equal_orders:
        val = p.beta * (float(aczel_daroczy(w, p.beta)) + log_norm(w, p.beta))
    else:
        val = (
            p.alpha
            * p.beta
            / (p.alpha - p.beta)
            * (log_norm(w, p.beta) - log_norm(w, p.alpha))
        )
    return EntropyValue(val, "lne", (p.alpha, p.beta))


def lne_min_entropy_limit(w, beta) -> EntropyValue:
    """The alpha -> infinity limit of the logarithmic norm entropy,
    beta * [-log(max w) + log||w||_beta]: a scale-invariant min-entropy."""
    beta = float(beta)
    if not np.isfinite(beta) or beta <= 0:
        raise ValueError(f"beta must be a finite positive real, got {beta!r}")
    w = as_weights(w)
    val = beta * (log_norm(w, beta) - math.log(w.max()))
    return EntropyValue(val, "min_entropy_scaled", (beta,))


def gm_subadditivity_rhs(p, q, params) -> float:
    """Generalized-mean bound for the entropy of a concatenated system.

    For sub-probability vectors with combined mass <= 1 this returns

        g^{-1}[ (||p||_b^a g(E(p)) + ||q||_b^a g(E(q)))
                / (||p||_b^a + ||q||_b^a) ],

    with link g(x) = 2^{(1-a/b) x / log 2} = exp((1-a/b) x), evaluated in
    log space.  Compare against lne(concatenate(p, q)); the comparison
    direction is established empirically in the test suite.  The a == b
    case degenerates to equality through a linear link and is rejected.
    """
    prm = _as_params(params)
    if prm.equal_orders:
        raise ValueError("generalized-mean bound needs alpha != beta")
    p = as_weights(p, "p")
    q = as_weights(q, "q")
    if p.sum() + q.sum() > 1.0 + TOL_MASS:
        raise ValueError(f"combined mass {p.sum() + q.sum()} exceeds 1")
    lr = 1.0 - prm.alpha / prm.beta
    lw_p = prm.alpha * log_norm(p, prm.beta)
    lw_q = prm.alpha * log_norm(q, prm.beta)
    ep = float(lne(p, prm))
    eq = float(lne(q, prm))
    num = logsumexp([lw_p + lr * ep, lw_q + lr * eq])
    den = logsumexp([lw_p, lw_q])
    return float((num - den) / lr)
