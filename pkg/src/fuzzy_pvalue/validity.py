"""Exact validity and coverage checks by enumerating the whole sample space.

For small ``m`` and ``n`` every outcome ``(u, v)`` can be treated in turn as
the observation, giving the complete table of p-values at a fixed theta.
Rejection and coverage probabilities are then finite sums of joint binomial
probabilities, so no simulation error enters anywhere.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .binom import BinomParams, pmf_vector
from .inference import BergerBoosConfig, HypothesisSet, grade_function, sup_over_theta
from .nuisance import SupConfig
from .tail import TwoSampleData, check_theta, omega_range

MAX_OUTCOMES = 400
VALIDITY_SLACK = 1e-6
DEFAULT_THETAS = tuple(round(-0.9 + 0.09 * i, 10) + 0.0 for i in range(21))
DEFAULT_ALPHAS = tuple(round(0.05 * i, 10) for i in range(1, 20))
DEFAULT_OMEGA_POINTS = 21


class SampleSpaceTooLarge(ValueError):
    pass


def _guard(m: int, n: int, force: bool):
    size = (m + 1) * (n + 1)
    if size > MAX_OUTCOMES and not force:
        raise SampleSpaceTooLarge(
            f"(m+1)(n+1) = {size} outcomes exceeds the limit of {MAX_OUTCOMES}; pass force=True to run anyway"
        )


def variant_name(bb: BergerBoosConfig | None) -> str:
    if bb is None:
        return "plain"
    return f"berger-boos(gamma={bb.gamma:g}, interval={bb.interval})"


def enumerate_pvalues(
    m: int,
    n: int,
    theta: float,
    cfg: SupConfig = SupConfig(),
    bb: BergerBoosConfig | None = None,
    force: bool = False,
) -> np.ndarray:
    """p-value of ``H0: theta`` for every possible observation.

    Entry ``[u, v]`` treats ``x = u``, ``y = v`` as the data.
    """
    _guard(m, n, force)
    theta = check_theta(theta)
    table = np.empty((m + 1, n + 1))
    for u in range(m + 1):
        for v in range(n + 1):
            table[u, v] = grade_function(TwoSampleData(u, m, v, n), cfg, bb)(theta)
    return table


def outcome_probabilities(m: int, n: int, theta: float, omega: float) -> np.ndarray:
    """Joint pmf of ``(X, Y)`` under ``(theta, omega)`` as an ``(m+1, n+1)`` array."""
    lo, hi = omega_range(theta)
    if not lo <= omega <= hi:
        raise ValueError(f"omega={omega!r} outside [{lo}, {hi}]")
    p2 = min(1.0, max(0.0, omega + theta))
    return np.outer(pmf_vector(BinomParams(m, omega)), pmf_vector(BinomParams(n, p2)))


def rejection_probability(table: np.ndarray, probs: np.ndarray, alpha: float) -> float:
    return math.fsum(probs[table <= alpha])


def validity_excess(m: int, n: int, theta: float, omega: float, alpha: float, table: np.ndarray) -> float:
    """``P[p <= alpha] - alpha``; a valid p-value keeps this at or below zero."""
    return rejection_probability(table, outcome_probabilities(m, n, theta, omega), alpha) - alpha


def coverage_probability(
    m: int,
    n: int,
    theta: float,
    omega: float,
    alpha: float,
    table: np.ndarray | None = None,
    cfg: SupConfig = SupConfig(),
    bb: BergerBoosConfig | None = None,
) -> float:
    """Probability that the level ``1 - alpha`` cut covers the true theta.

    The cut contains theta exactly when the p-value at theta exceeds alpha.
    """
    if table is None:
        table = enumerate_pvalues(m, n, theta, cfg, bb)
    probs = outcome_probabilities(m, n, theta, omega)
    return math.fsum(probs[table > alpha])


def interior_omegas(theta: float, count: int = DEFAULT_OMEGA_POINTS) -> np.ndarray:
    """``count`` equispaced points strictly inside the omega range."""
    lo, hi = omega_range(theta)
    return lo + (hi - lo) * np.arange(1, count + 1) / (count + 1)


@dataclass
class ValidityReport:
    m: int
    n: int
    variant: str
    theta_grid: list
    omega_points: int
    alpha_grid: list
    worst_excess: float
    worst_coverage_deficit: float
    cells: list = field(repr=False)
    slack: float = VALIDITY_SLACK

    @property
    def valid(self) -> bool:
        return self.worst_excess <= self.slack

    @property
    def covers(self) -> bool:
        return self.worst_coverage_deficit <= self.slack

    @property
    def passed(self) -> bool:
        return self.valid and self.covers

    def to_dict(self) -> dict:
        return {
            "schema_version": 1,
            "m": self.m,
            "n": self.n,
            "variant": self.variant,
            "theta_grid": list(self.theta_grid),
            "omega_points": self.omega_points,
            "alpha_grid": list(self.alpha_grid),
            "slack": self.slack,
            "worst_excess": self.worst_excess,
            "worst_coverage_deficit": self.worst_coverage_deficit,
            "passed": self.passed,
            "cells": self.cells,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)

    def summary(self) -> str:
        """Human-readable table: worst cell per theta."""
        lines = [
            f"m={self.m} n={self.n} variant={self.variant}",
            f"{'theta':>8} {'max excess':>12} {'max deficit':>12}",
        ]
        for theta in self.theta_grid:
            rows = [c for c in self.cells if c["theta"] == theta]
            ex = max(c["excess"] for c in rows)
            de = max(c["coverage_deficit"] for c in rows)
            lines.append(f"{theta:8.3f} {ex:12.3e} {de:12.3e}")
        lines.append(f"worst_excess={self.worst_excess:.3e} worst_coverage_deficit={self.worst_coverage_deficit:.3e}")
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)


def verify(
    m: int,
    n: int,
    thetas=DEFAULT_THETAS,
    omega_points: int = DEFAULT_OMEGA_POINTS,
    alphas=DEFAULT_ALPHAS,
    cfg: SupConfig = SupConfig(),
    bb: BergerBoosConfig | None = None,
    force: bool = False,
) -> ValidityReport:
    """Check validity and coverage on every (theta, omega, alpha) cell."""
    _guard(m, n, force)
    cells = []
    for theta in thetas:
        table = enumerate_pvalues(m, n, theta, cfg, bb, force)
        for omega in interior_omegas(theta, omega_points):
            probs = outcome_probabilities(m, n, theta, omega)
            for alpha in alphas:
                reject = rejection_probability(table, probs, alpha)
                cover = math.fsum(probs[table > alpha])
                cells.append(
                    {
                        "theta": theta,
                        "omega": float(omega),
                        "alpha": alpha,
                        "rejection": reject,
                        "excess": reject - alpha,
                        "coverage": cover,
                        "coverage_deficit": (1.0 - alpha) - cover,
                    }
                )
    return ValidityReport(
        m,
        n,
        variant_name(bb),
        list(thetas),
        omega_points,
        list(alphas),
        max(c["excess"] for c in cells),
        max(c["coverage_deficit"] for c in cells),
        cells,
    )


def extended_pvalue_table(
    m: int,
    n: int,
    h: HypothesisSet,
    cfg: SupConfig = SupConfig(),
    bb: BergerBoosConfig | None = None,
    points: int = 21,
    anchors=(),
    force: bool = False,
) -> np.ndarray:
    """Composite-hypothesis p-value for every possible observation."""
    _guard(m, n, force)
    table = np.empty((m + 1, n + 1))
    for u in range(m + 1):
        for v in range(n + 1):
            func = grade_function(TwoSampleData(u, m, v, n), cfg, bb)
            table[u, v] = sup_over_theta(func, h, points, anchors=anchors)[0]
    return table
