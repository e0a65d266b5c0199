"""Membership functions built from exact unconditional p-values.

The p-value of ``H0: theta = theta0`` is read as the membership grade of
``theta0`` in the fuzzy set of plausible parameter values.  From that curve
one gets confidence sets (strong alpha-cuts), p-values of composite
hypotheses (height restricted to the hypothesis set), and a partial order for
comparing tests (fuzzy inclusion).
"""

from __future__ import annotations

import enum
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from statistics import NormalDist

import numpy as np
from scipy.stats import beta

from .fuzzy import AlphaCut, MembershipCurve, included_in, strong_cut
from .nuisance import NuisanceSet, SupConfig, golden_section_max, grid_local_maxima, sup_tail
from .tail import TwoSampleData, check_theta, omega_range

THETA_LO = -0.999
THETA_HI = 0.999
CURVE_POINTS = 401
HYPOTHESIS_POINTS = 201
THETA_TOL = 1e-6


@dataclass(frozen=True)
class HypothesisSet:
    """Closed interval ``[lo, hi]`` of theta values, or a finite set of points."""

    lo: float
    hi: float
    points: tuple[float, ...] | None = None

    def __post_init__(self):
        if self.points is not None:
            pts = tuple(sorted(float(p) for p in self.points))
            if not pts:
                raise ValueError("empty hypothesis set")
            for p in pts:
                check_theta(p)
            object.__setattr__(self, "points", pts)
            object.__setattr__(self, "lo", pts[0])
            object.__setattr__(self, "hi", pts[-1])
            return
        if not self.lo <= self.hi:
            raise ValueError(f"empty hypothesis set [{self.lo}, {self.hi}]")
        check_theta(self.lo)
        check_theta(self.hi)

    @classmethod
    def of_points(cls, *points: float) -> HypothesisSet:
        return cls(0.0, 0.0, tuple(points))

    @classmethod
    def parse(cls, text: str) -> HypothesisSet:
        """Parse ``"lo:hi"``."""
        try:
            lo, hi = (float(s) for s in text.split(":"))
        except ValueError:
            raise ValueError(f"expected 'lo:hi', got {text!r}") from None
        return cls(lo, hi)

    def __contains__(self, theta: float) -> bool:
        if self.points is not None:
            return theta in self.points
        return self.lo <= theta <= self.hi


NUISANCE_INTERVALS = ("wald", "clopper-pearson")


@dataclass(frozen=True)
class BergerBoosConfig:
    """Level ``1 - gamma`` confidence set for the nuisance parameter.

    ``interval="wald"`` is the plain normal-approximation interval.
    ``"clopper-pearson"`` is the exact interval, whose coverage really is at
    least ``1 - gamma`` at every nuisance value.
    """

    gamma: float = 1e-4
    interval: str = "wald"

    def __post_init__(self):
        if not 0.0 < self.gamma < 1.0:
            raise ValueError(f"gamma must lie in (0, 1), got {self.gamma!r}")
        if self.interval not in NUISANCE_INTERVALS:
            raise ValueError(f"interval must be one of {NUISANCE_INTERVALS}, got {self.interval!r}")

    @property
    def z(self) -> float:
        # upper 1 - gamma/2 quantile via the lower tail, exact for tiny gamma
        return -NormalDist().inv_cdf(self.gamma / 2.0)


class Preference(enum.Enum):
    A_PREFERRED = "a-preferred"
    B_PREFERRED = "b-preferred"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class ExtendedPValue:
    theta_lo: float
    theta_hi: float
    p_value: float
    refined_argmax: float
    variant: str = "plain"
    extra: dict = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict:
        return {
            "schema_version": 1,
            "theta_lo": self.theta_lo,
            "theta_hi": self.theta_hi,
            "p_value": self.p_value,
            "refined_argmax": self.refined_argmax,
            "variant": self.variant,
            **self.extra,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)


# ---------------------------------------------------------------------------
# pointwise membership grades


def mu_at(data: TwoSampleData, theta: float, cfg: SupConfig = SupConfig()) -> float:
    """Exact unconditional p-value of ``H0: theta`` (sup over the full nuisance range)."""
    return sup_tail(data, check_theta(theta), None, cfg).sup_value


def wald_interval(x: int, m: int, z: float) -> tuple[float, float]:
    center = x / m
    half = z * math.sqrt(x * (m - x) / m**3)
    return center - half, center + half


def clopper_pearson_interval(x: int, m: int, gamma: float) -> tuple[float, float]:
    lo = 0.0 if x == 0 else float(beta.ppf(gamma / 2, x, m - x + 1))
    hi = 1.0 if x == m else float(beta.ppf(1 - gamma / 2, x + 1, m - x))
    return lo, hi


def wald_set(data: TwoSampleData, theta: float, bb: BergerBoosConfig) -> NuisanceSet | None:
    """Confidence interval for the arm-1 success probability, clipped to the omega range.

    The interval is the Wald interval unless ``bb.interval`` asks otherwise.
    Returns ``None`` when nothing admissible is left.  A zero-width remainder
    sitting on the boundary of the open omega range (the degenerate Wald
    interval produced by ``x = 0`` or ``x = m``) also counts as empty.
    """
    lo_t, hi_t = omega_range(theta)
    if bb.interval == "wald":
        lo_c, hi_c = wald_interval(data.x, data.m, bb.z)
    else:
        lo_c, hi_c = clopper_pearson_interval(data.x, data.m, bb.gamma)
    lo, hi = max(lo_c, lo_t), min(hi_c, hi_t)
    if lo > hi:
        return None
    if lo == hi and not lo_t < lo < hi_t:
        return None
    return NuisanceSet(lo, hi)


def mu_bb_at(
    data: TwoSampleData,
    theta: float,
    bb: BergerBoosConfig = BergerBoosConfig(),
    cfg: SupConfig = SupConfig(),
) -> float:
    """Berger-Boos grade: ``gamma`` plus the tail supremum over the Wald set.

    An empty Wald set contributes a supremum of zero, giving exactly ``gamma``.
    """
    theta = check_theta(theta)
    ns = wald_set(data, theta, bb)
    if ns is None:
        return bb.gamma
    return min(1.0, bb.gamma + sup_tail(data, theta, ns, cfg).sup_value)


def grade_function(data: TwoSampleData, cfg: SupConfig = SupConfig(), bb: BergerBoosConfig | None = None):
    """``theta -> grade`` for the plain or Berger-Boos membership function."""
    if bb is None:
        return partial(mu_at, data, cfg=cfg)
    return partial(mu_bb_at, data, bb=bb, cfg=cfg)


def _map(func, items, workers: int) -> list:
    if workers <= 1 or len(items) < 2:
        return [func(t) for t in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map preserves input order, so results do not depend on scheduling
        return list(pool.map(func, items, chunksize=max(1, len(items) // (4 * workers))))


# ---------------------------------------------------------------------------
# curves, cuts, composite hypotheses


def theta_grid(lo: float = THETA_LO, hi: float = THETA_HI, count: int = CURVE_POINTS) -> np.ndarray:
    if count < 2:
        raise ValueError("theta grid needs at least 2 points")
    check_theta(lo)
    check_theta(hi)
    if not lo < hi:
        raise ValueError("theta grid needs lo < hi")
    grid = np.linspace(lo, hi, count)
    grid[-1] = hi
    return grid


def mu_curve(
    data: TwoSampleData,
    lo: float = THETA_LO,
    hi: float = THETA_HI,
    count: int = CURVE_POINTS,
    cfg: SupConfig = SupConfig(),
    bb: BergerBoosConfig | None = None,
    workers: int = 1,
) -> MembershipCurve:
    """Membership function sampled on a uniform theta grid."""
    grid = theta_grid(lo, hi, count)
    values = _map(grade_function(data, cfg, bb), grid.tolist(), workers)
    return MembershipCurve(grid, np.array(values), {"lo": lo, "hi": hi, "count": count})


def sup_over_theta(func, h: HypothesisSet, points: int = HYPOTHESIS_POINTS, tol: float = THETA_TOL, anchors=()):
    """Supremum of ``func`` over a hypothesis set.

    Intervals are scanned on a uniform grid (plus any ``anchors`` inside the
    interval) and each grid local maximum is polished by golden-section
    search down to ``tol``.  Returns ``(value, argmax, refined)``.
    """
    if h.points is not None:
        values = [func(t) for t in h.points]
        best = int(np.argmax(values))
        return float(values[best]), h.points[best], False
    if h.lo == h.hi:
        return float(func(h.lo)), h.lo, False
    grid = np.linspace(h.lo, h.hi, points)
    grid[-1] = h.hi
    extra = [a for a in anchors if h.lo <= a <= h.hi]
    if extra:
        grid = np.unique(np.concatenate([grid, extra]))
    values = np.array([func(t) for t in grid.tolist()])
    best = int(np.argmax(values))
    best_x, best_f, refined = float(grid[best]), float(values[best]), False
    for i in grid_local_maxima(values):
        a, b = float(grid[max(i - 1, 0)]), float(grid[min(i + 1, len(grid) - 1)])
        x, fx = golden_section_max(func, a, b, tol)
        if fx > best_f:
            best_x, best_f, refined = x, fx, True
    return best_f, best_x, refined


def extended_pvalue(
    data: TwoSampleData,
    h: HypothesisSet,
    cfg: SupConfig = SupConfig(),
    points: int = HYPOTHESIS_POINTS,
    tol: float = THETA_TOL,
    anchors=(),
) -> ExtendedPValue:
    """p-value of ``H0: theta in h``: the height of the membership curve restricted to ``h``."""
    value, arg, refined = sup_over_theta(grade_function(data, cfg), h, points, tol, anchors)
    return ExtendedPValue(h.lo, h.hi, value, arg, "plain", {"refined": refined})


def bb_extended_pvalue(
    data: TwoSampleData,
    h: HypothesisSet,
    bb: BergerBoosConfig = BergerBoosConfig(),
    cfg: SupConfig = SupConfig(),
    points: int = HYPOTHESIS_POINTS,
    tol: float = THETA_TOL,
    anchors=(),
) -> ExtendedPValue:
    """Berger-Boos counterpart of :func:`extended_pvalue`."""
    value, arg, refined = sup_over_theta(grade_function(data, cfg, bb), h, points, tol, anchors)
    return ExtendedPValue(h.lo, h.hi, value, arg, "berger-boos", {"refined": refined, "gamma": bb.gamma})


def confidence_cut(curve: MembershipCurve, alpha: float, refine=None) -> AlphaCut:
    """Level ``1 - alpha`` confidence set ``{theta : mu(theta) > alpha}``.

    The hull of the returned cut is the reported confidence interval; the
    interval union is the exact set on the sampled grid.
    """
    return strong_cut(curve, alpha, refine=refine)


def prefer_test(a: MembershipCurve, b: MembershipCurve) -> Preference:
    """Compare two tests through fuzzy inclusion of their membership curves."""
    ab, ba = included_in(a, b), included_in(b, a)
    if ab and ba:
        return Preference.EQUAL
    if ab:
        return Preference.A_PREFERRED
    if ba:
        return Preference.B_PREFERRED
    return Preference.INCOMPARABLE
