"""Binomial probability kernels evaluated in log space.

All pmf values are built from a shared table of ``log(k!)``.  The table is
grown on demand and replaced wholesale, so readers never observe a
partially written array.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

_LOG_FACTORIAL = np.zeros(1)


def log_factorial_table(n: int) -> np.ndarray:
    """Return ``log(k!)`` for ``k = 0..n`` (possibly a longer array)."""
    global _LOG_FACTORIAL
    table = _LOG_FACTORIAL
    if len(table) <= n:
        size = max(n + 1, 2 * len(table))
        table = np.array([math.lgamma(k + 1.0) for k in range(size)])
        _LOG_FACTORIAL = table
    return table


@dataclass(frozen=True)
class BinomParams:
    """Number of trials and success probability of a binomial law."""

    trials: int
    success_prob: float

    def __post_init__(self):
        if int(self.trials) != self.trials or self.trials < 0:
            raise ValueError(f"trials must be a nonnegative integer, got {self.trials!r}")
        if not 0.0 <= self.success_prob <= 1.0:
            raise ValueError(f"success_prob must lie in [0, 1], got {self.success_prob!r}")


def log_pmf(k: int, p: BinomParams) -> float:
    """Log-probability of ``k`` successes; ``-inf`` off the support."""
    n, q = p.trials, p.success_prob
    if not 0 <= k <= n:
        raise ValueError(f"k={k} outside 0..{n}")
    # point masses at the endpoints of [0, 1]
    if q == 0.0:
        return 0.0 if k == 0 else -math.inf
    if q == 1.0:
        return 0.0 if k == n else -math.inf
    if q > 0.5:
        # 1 - q is exact for q >= 1/2, so mirroring keeps the symmetry exact
        k, q = n - k, 1.0 - q
    lf = log_factorial_table(n)
    return float(lf[n] - lf[k] - lf[n - k] + k * math.log(q) + (n - k) * math.log1p(-q))


def pmf_vector(p: BinomParams) -> np.ndarray:
    """Full pmf ``P(K = k)`` for ``k = 0..trials`` as a float array."""
    n, q = p.trials, p.success_prob
    out = np.zeros(n + 1)
    if q == 0.0:
        out[0] = 1.0
        return out
    if q == 1.0:
        out[n] = 1.0
        return out
    mirror = q > 0.5
    if mirror:
        q = 1.0 - q
    lf = log_factorial_table(n)
    k = np.arange(n + 1)
    out[:] = np.exp(lf[n] - lf[k] - lf[n - k] + k * math.log(q) + (n - k) * math.log1p(-q))
    return out[::-1].copy() if mirror else out


def pmf_matrix(trials: int, probs: np.ndarray) -> np.ndarray:
    """Pmf rows for many success probabilities at once.

    Row ``i`` is ``pmf_vector(BinomParams(trials, probs[i]))``; endpoint
    probabilities produce exact point-mass rows.
    """
    probs = np.clip(np.asarray(probs, dtype=float), 0.0, 1.0)
    lf = log_factorial_table(trials)
    k = np.arange(trials + 1)
    log_coef = lf[trials] - lf[k] - lf[trials - k]
    interior = (probs > 0.0) & (probs < 1.0)
    out = np.zeros((len(probs), trials + 1))
    for mirror in (False, True):
        rows = interior & ((probs > 0.5) if mirror else (probs <= 0.5))
        q = 1.0 - probs[rows] if mirror else probs[rows]
        if not q.size:
            continue
        block = np.exp(
            log_coef[None, :]
            + k[None, :] * np.log(q)[:, None]
            + (trials - k)[None, :] * np.log1p(-q)[:, None]
        )
        out[rows] = block[:, ::-1] if mirror else block
    out[probs == 0.0, 0] = 1.0
    out[probs == 1.0, trials] = 1.0
    return out

