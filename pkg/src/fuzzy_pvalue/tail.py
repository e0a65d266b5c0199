"""Exact tail probability of the two-sample binomial difference statistic.

Outcomes ``(u, v)`` of ``X ~ Bin(m, w)`` and ``Y ~ Bin(n, w + theta)`` are
compared through the integer-scaled score ``|m*v - n*u - theta*m*n|``, which
is ``m*n`` times ``|v/n - u/m - theta|``.  Both sides of the extremeness
comparison use the same floating expression, so ties are resolved exactly as
real ties.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .binom import BinomParams, pmf_matrix, pmf_vector


@dataclass(frozen=True)
class TwoSampleData:
    """Observed successes ``x`` of ``m`` (arm 1) and ``y`` of ``n`` (arm 2)."""

    x: int
    m: int
    y: int
    n: int

    def __post_init__(self):
        for name in ("x", "m", "y", "n"):
            value = getattr(self, name)
            if int(value) != value:
                raise ValueError(f"{name} must be an integer, got {value!r}")
        if self.m < 1 or self.n < 1:
            raise ValueError("sample sizes m and n must be >= 1")
        if not 0 <= self.x <= self.m:
            raise ValueError(f"x={self.x} outside 0..{self.m}")
        if not 0 <= self.y <= self.n:
            raise ValueError(f"y={self.y} outside 0..{self.n}")

    @property
    def theta_hat(self) -> float:
        """Observed difference of proportions ``y/n - x/m``."""
        return self.y / self.n - self.x / self.m


def check_theta(theta: float) -> float:
    theta = float(theta)
    if not -1.0 < theta < 1.0:
        raise ValueError(f"theta must lie in (-1, 1), got {theta!r}")
    return theta


def omega_range(theta: float) -> tuple[float, float]:
    """Closed range of the nuisance parameter compatible with ``theta``."""
    theta = check_theta(theta)
    return max(0.0, -theta), min(1.0, 1.0 - theta)


def scaled_score(u: int, v: int, data: TwoSampleData, theta: float) -> float:
    """``|m*v - n*u - theta*m*n|`` for the outcome ``(u, v)``."""
    if not (0 <= u <= data.m and 0 <= v <= data.n):
        raise ValueError(f"outcome ({u}, {v}) outside the sample space")
    tau = theta * data.m * data.n
    return abs((data.m * v - data.n * u) - tau)


class RejectionSet:
    """The set of outcomes at least as extreme as the observed one, at fixed theta.

    The membership mask depends on theta only, so one instance serves every
    nuisance value probed while maximizing over omega.
    """

    def __init__(self, data: TwoSampleData, theta: float):
        self.data = data
        self.theta = check_theta(theta)
        self.lower, self.upper = omega_range(self.theta)

    @cached_property
    def mask(self) -> np.ndarray:
        d = self.data
        tau = self.theta * d.m * d.n
        u = np.arange(d.m + 1)[:, None]
        v = np.arange(d.n + 1)[None, :]
        scores = np.abs((d.m * v - d.n * u) - tau)
        observed = abs((d.m * d.y - d.n * d.x) - tau)
        return scores >= observed

    def arm2_prob(self, omega):
        # snap so that the range endpoints give exact point masses in arm 2
        p = np.clip(np.asarray(omega, dtype=float) + self.theta, 0.0, 1.0)
        p = np.where(omega == 1.0 - self.theta, 1.0, p)
        return np.where(omega == -self.theta, 0.0, p)

    def _check_omega(self, omega: float) -> float:
        omega = float(omega)
        if not self.lower <= omega <= self.upper:
            raise ValueError(
                f"omega={omega!r} outside [{self.lower!r}, {self.upper!r}] for theta={self.theta!r}"
            )
        return omega

    def probability(self, omega: float) -> float:
        """Tail probability at one nuisance value, summed with ``math.fsum``."""
        omega = self._check_omega(omega)
        d = self.data
        px = pmf_vector(BinomParams(d.m, omega))
        py = pmf_vector(BinomParams(d.n, float(self.arm2_prob(omega))))
        joint = np.outer(px, py)[self.mask]
        return min(1.0, max(0.0, math.fsum(joint)))

    def probabilities(self, omegas) -> np.ndarray:
        """Vectorized tail probabilities over an array of nuisance values."""
        omegas = np.asarray(omegas, dtype=float)
        if omegas.size and (omegas.min() < self.lower or omegas.max() > self.upper):
            raise ValueError("omega grid leaves the admissible range")
        d = self.data
        px = pmf_matrix(d.m, omegas)
        py = pmf_matrix(d.n, self.arm2_prob(omegas))
        vals = np.einsum("iu,uv,iv->i", px, self.mask.astype(float), py)
        return np.clip(vals, 0.0, 1.0)


def joint_tail(data: TwoSampleData, theta: float, omega: float) -> float:
    """``P(|Y/n - X/m - theta| >= |y/n - x/m - theta|)`` at nuisance value ``omega``."""
    return RejectionSet(data, theta).probability(omega)
