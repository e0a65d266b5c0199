"""Supremum of the exact tail probability over the nuisance parameter.

The objective is a polynomial in omega of degree at most ``m + n`` and is
often multimodal.  It is scanned on a uniform grid, and every grid local
maximum (plus both endpoints) is polished by golden-section search.  This is
heuristic-complete for desk-scale samples, not a certified global optimum;
any residual error can only under-estimate the supremum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .tail import RejectionSet, TwoSampleData, omega_range

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


class EmptyNuisanceSet(ValueError):
    """Raised when the nuisance set has no admissible point."""


@dataclass(frozen=True)
class NuisanceSet:
    """Closed interval ``[lower, upper]`` of nuisance values."""

    lower: float
    upper: float

    def __post_init__(self):
        if not self.lower <= self.upper:
            raise EmptyNuisanceSet(f"empty nuisance set [{self.lower}, {self.upper}]")

    @classmethod
    def full(cls, theta: float) -> NuisanceSet:
        return cls(*omega_range(theta))

    def clip(self, theta: float) -> NuisanceSet:
        """Intersection with the closed admissible range for ``theta``."""
        lo, hi = omega_range(theta)
        return NuisanceSet(max(lo, self.lower), min(hi, self.upper))

    @property
    def width(self) -> float:
        return self.upper - self.lower


@dataclass(frozen=True)
class SupConfig:
    """Accuracy contract of the omega maximization."""

    grid_points: int = 1001
    omega_tol: float = 1e-8

    def __post_init__(self):
        if self.grid_points < 3:
            raise ValueError("grid_points must be >= 3")
        if not self.omega_tol > 0:
            raise ValueError("omega_tol must be positive")


@dataclass(frozen=True)
class SupResult:
    sup_value: float
    arg_omega: float
    grid_points: int
    refined: bool


def golden_section_max(f, a: float, b: float, tol: float) -> tuple[float, float]:
    """Maximize ``f`` on ``[a, b]`` by golden-section search.

    Returns the best ``(x, f(x))`` seen among all probes, including both
    endpoints, so the result never falls below ``max(f(a), f(b))``.
    """
    best_x, best_f = a, f(a)
    fb = f(b)
    if fb > best_f:
        best_x, best_f = b, fb
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
    for x, fx in ((c, fc), (d, fd)):
        if fx > best_f:
            best_x, best_f = x, fx
    return best_x, best_f


def grid_local_maxima(values: np.ndarray, rel_noise: float = 1e-13) -> list[int]:
    """Indices of grid local maxima, endpoints always included.

    Rises smaller than ``rel_noise`` relative to the value are treated as
    rounding noise, so a flat plateau contributes at most its first index.
    """
    values = np.asarray(values)
    n = len(values)
    idx = {0, n - 1}
    if n > 2:
        mid = values[1:-1]
        noise = rel_noise * np.abs(mid)
        rise = mid - values[:-2] > noise
        no_fall = values[2:] - mid <= noise
        idx.update((np.flatnonzero(rise & no_fall) + 1).tolist())
    return sorted(idx)


def maximize_on_grid(f_scalar, grid: np.ndarray, values: np.ndarray, tol: float):
    """Polish each grid local maximum with golden-section search.

    Returns ``(x, f(x), refined)`` for the best point found.  Candidates are
    visited in index order and ties keep the earlier point, so the result is
    deterministic.
    """
    best = int(np.argmax(values))
    best_x, best_f = float(grid[best]), float(values[best])
    refined = False
    for i in grid_local_maxima(values):
        a = grid[max(i - 1, 0)]
        b = grid[min(i + 1, len(grid) - 1)]
        x, fx = golden_section_max(f_scalar, float(a), float(b), tol)
        if fx > best_f:
            best_x, best_f, refined = x, fx, True
    return best_x, best_f, refined


def sup_tail(
    data: TwoSampleData,
    theta: float,
    nuisance: NuisanceSet | None = None,
    cfg: SupConfig = SupConfig(),
    rejection: RejectionSet | None = None,
) -> SupResult:
    """Supremum over ``nuisance`` of the tail probability at ``theta``.

    ``nuisance`` defaults to the full admissible range.  It is intersected
    with that range first; an empty intersection raises
    :class:`EmptyNuisanceSet`.
    """
    rs = rejection if rejection is not None else RejectionSet(data, theta)
    ns = NuisanceSet.full(theta) if nuisance is None else nuisance.clip(theta)
    if ns.width == 0.0:
        value = rs.probability(ns.lower)
        return SupResult(value, ns.lower, 1, False)

    grid = np.linspace(ns.lower, ns.upper, cfg.grid_points)
    grid[-1] = ns.upper
    values = rs.probabilities(grid)
    x, _, refined = maximize_on_grid(rs.probability, grid, values, cfg.omega_tol)
    value = rs.probability(x)
    if not refined:
        value = max(value, float(values.max()))
    return SupResult(value, float(x), cfg.grid_points, refined)
