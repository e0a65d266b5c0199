"""Fuzzy sets sampled on a finite grid of the universe of discourse."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

import numpy as np

INCLUSION_TOL = 1e-12


@dataclass(frozen=True)
class MembershipCurve:
    """Membership grades ``values[i]`` at universe points ``grid[i]``."""

    grid: np.ndarray
    values: np.ndarray
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        grid = np.asarray(self.grid, dtype=float)
        values = np.asarray(self.values, dtype=float)
        if grid.ndim != 1 or grid.shape != values.shape:
            raise ValueError("grid and values must be 1-d arrays of equal length")
        if np.any(np.diff(grid) <= 0):
            raise ValueError("grid must be strictly increasing")
        if np.any((values < 0) | (values > 1)) or np.any(np.isnan(values)):
            raise ValueError("membership grades must lie in [0, 1]")
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "values", values)
        if not self.meta and len(grid):
            object.__setattr__(self, "meta", {"lo": grid[0], "hi": grid[-1], "count": len(grid)})

    @classmethod
    def from_function(cls, func, lo: float, hi: float, count: int) -> MembershipCurve:
        grid = np.linspace(lo, hi, count)
        return cls(grid, np.array([func(u) for u in grid]), {"lo": lo, "hi": hi, "count": count})

    def __len__(self):
        return len(self.grid)

    def restrict(self, lo: float, hi: float) -> MembershipCurve:
        keep = (self.grid >= lo) & (self.grid <= hi)
        return MembershipCurve(self.grid[keep], self.values[keep])

    def to_csv(self, columns=("u", "mu")) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for u, mu in zip(self.grid, self.values):
            writer.writerow([fmt(u), fmt(mu)])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> MembershipCurve:
        rows = list(csv.reader(io.StringIO(text)))[1:]
        return cls(np.array([float(r[0]) for r in rows]), np.array([float(r[1]) for r in rows]))

    def to_json(self) -> str:
        return json.dumps(
            {
                "schema_version": 1,
                "meta": {k: _jsonable(v) for k, v in self.meta.items()},
                # json writes floats with repr, which round-trips exactly
                "u": self.grid.tolist(),
                "mu": self.values.tolist(),
            },
            indent=1,
        )

    @classmethod
    def from_json(cls, text: str) -> MembershipCurve:
        obj = json.loads(text)
        return cls(np.array(obj["u"], dtype=float), np.array(obj["mu"], dtype=float), obj.get("meta", {}))


@dataclass(frozen=True)
class AlphaCut:
    """Strong alpha-cut as disjoint open intervals plus their convex hull."""

    alpha: float
    intervals: tuple[tuple[float, float], ...]

    @property
    def hull(self) -> tuple[float, float] | None:
        if not self.intervals:
            return None
        return self.intervals[0][0], self.intervals[-1][1]

    @property
    def empty(self) -> bool:
        return not self.intervals

    def contains(self, u: float) -> bool:
        return any(lo < u < hi for lo, hi in self.intervals)

    def to_dict(self) -> dict:
        hull = self.hull
        return {
            "alpha": self.alpha,
            "hull": None if hull is None else list(hull),
            "intervals": [list(iv) for iv in self.intervals],
        }


def fmt(x: float) -> str:
    """Round-trip exact decimal text (17 significant digits)."""
    return f"{float(x):.17g}"


def _jsonable(v):
    return v.item() if isinstance(v, np.generic) else v


def height(curve: MembershipCurve) -> float:
    """Largest sampled membership grade."""
    if len(curve) == 0:
        raise ValueError("height of an empty curve is undefined")
    return float(curve.values.max())


def _crossing(u0, f0, u1, f1, alpha, refine, tol):
    """Point between ``u0`` and ``u1`` where the grade crosses ``alpha``.

    Bisection on ``refine`` when given, otherwise on the linear interpolant.
    ``f0 <= alpha < f1`` or the reverse.
    """
    if refine is None:
        def g(u):
            return f0 + (f1 - f0) * (u - u0) / (u1 - u0)
    else:
        g = refine
    above0 = f0 > alpha
    a, b = u0, u1
    while b - a > tol:
        mid = 0.5 * (a + b)
        if (g(mid) > alpha) == above0:
            a = mid
        else:
            b = mid
    return 0.5 * (a + b)


def strong_cut(curve: MembershipCurve, alpha: float, refine=None, tol: float = 1e-6) -> AlphaCut:
    """``{u : mu(u) > alpha}`` as maximal runs of grid points above ``alpha``.

    Run boundaries are located between the bracketing grid points to within
    ``tol``.  ``refine`` may supply the exact membership function; the
    linear interpolant of the samples is used otherwise.  A run touching the
    edge of the grid ends at that grid point.
    """
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha!r}")
    u, f = curve.grid, curve.values
    above = f > alpha
    intervals = []
    i, n = 0, len(u)
    while i < n:
        if not above[i]:
            i += 1
            continue
        j = i
        while j + 1 < n and above[j + 1]:
            j += 1
        lo = u[i] if i == 0 else _crossing(u[i - 1], f[i - 1], u[i], f[i], alpha, refine, tol)
        hi = u[j] if j == n - 1 else _crossing(u[j], f[j], u[j + 1], f[j + 1], alpha, refine, tol)
        intervals.append((float(lo), float(hi)))
        i = j + 1
    return AlphaCut(alpha, tuple(intervals))


def _check_same_grid(a: MembershipCurve, b: MembershipCurve):
    if a.grid.shape != b.grid.shape or not np.array_equal(a.grid, b.grid):
        raise ValueError("curves must share the same grid")


def included_in(a: MembershipCurve, b: MembershipCurve) -> bool:
    """Fuzzy inclusion ``A <= B``: ``mu_A <= mu_B`` at every grid point."""
    _check_same_grid(a, b)
    return bool(np.all(a.values <= b.values + INCLUSION_TOL))


def triangular(center: float, half_width: float):
    """Membership function ``max(0, 1 - |u - center| / half_width)``."""
    def mu(u):
        return np.maximum(0.0, 1.0 - np.abs(np.asarray(u, dtype=float) - center) / half_width)
    return mu


# the two "about 10" sets: A has support [9, 11], B has support [8, 12]
about_ten_narrow = triangular(10.0, 1.0)
about_ten_wide = triangular(10.0, 2.0)


def about_ten_curves(lo: float = 7.0, hi: float = 13.0, count: int = 601):
    grid = np.linspace(lo, hi, count)
    meta = {"lo": lo, "hi": hi, "count": count}
    return (
        MembershipCurve(grid, about_ten_narrow(grid), meta),
        MembershipCurve(grid, about_ten_wide(grid), meta),
    )
