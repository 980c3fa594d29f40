"""Locally weighted polynomial regression (LOESS) for the intertemporal curves.

At each of ``grid_points`` equally spaced evaluation points spanning the
data, the nearest ``ceil(span * N)`` series points (clamped below to
``degree + 2`` so short series stay solvable) are weighted by the tricube
kernel of their scaled distance and a degree-1 or degree-2 polynomial is
fitted by weighted least squares on the centered predictor. The fitted
value at the evaluation point is the curve height there.

No robustness reweighting iterations and no confidence bands: the curve
is the plain local fit.

The inner loop lives in a compiled extension (``_loess_cy``) with a pure
Python fallback (``_loess_py``) selected at import time; both produce
bit-identical results. Set ``LEXSENT_LOESS_BACKEND=python|compiled`` to
force one.
"""

from __future__ import annotations

import os
from array import array
from dataclasses import dataclass
from math import ceil, isfinite
from typing import NamedTuple, Sequence

from .errors import InsufficientDataError


def _select_backend():
    forced = os.environ.get("LEXSENT_LOESS_BACKEND", "").strip().lower()
    if forced not in ("", "python", "compiled"):
        raise ValueError(f"LEXSENT_LOESS_BACKEND must be 'python' or 'compiled', got {forced!r}")
    if forced == "python":
        from . import _loess_py as kernel
        return kernel, "python"
    if forced == "compiled":
        from . import _loess_cy as kernel
        return kernel, "compiled"
    try:
        from . import _loess_cy as kernel
        return kernel, "compiled"
    except ImportError:
        from . import _loess_py as kernel
        return kernel, "python"


_KERNEL, LOESS_BACKEND = _select_backend()


class SeriesPoint(NamedTuple):
    x: float
    y: float


class CurvePoint(NamedTuple):
    x: float
    y_hat: float


@dataclass(frozen=True)
class LoessConfig:
    """span: neighborhood fraction in (0, 1]; degree: 1 or 2 (local polynomial);
    grid_points: number of evaluation points (>= 2)."""

    span: float = 0.2
    degree: int = 2
    grid_points: int = 80

    def __post_init__(self):
        if not (0.0 < self.span <= 1.0):
            raise ValueError(f"span must be in (0, 1], got {self.span}")
        if self.degree not in (1, 2):
            raise ValueError(f"degree must be 1 or 2, got {self.degree}")
        if self.grid_points < 2:
            raise ValueError(f"grid_points must be >= 2, got {self.grid_points}")


@dataclass(frozen=True)
class SmoothedCurve:
    points: tuple[CurvePoint, ...]

    def xs(self) -> list[float]:
        return [p.x for p in self.points]

    def ys(self) -> list[float]:
        return [p.y_hat for p in self.points]


def tricube_weight(u: float) -> float:
    """(1 - u^3)^3 for u in [0, 1), else 0. u is a scaled distance, >= 0."""
    if u < 0.0:
        raise ValueError(f"u must be >= 0, got {u}")
    if u < 1.0:
        v = 1.0 - u * u * u
        return v * v * v
    return 0.0


def neighborhood_size(n_points: int, span: float, degree: int) -> int:
    """ceil(span * N), clamped to [degree + 2, N]."""
    q = ceil(span * n_points)
    if q < degree + 2:
        q = degree + 2
    if q > n_points:
        q = n_points
    return q


def loess_fit(series: Sequence[SeriesPoint | tuple[float, float]],
              config: LoessConfig = LoessConfig()) -> SmoothedCurve:
    """Fit the smoothed curve over [min x, max x].

    The series is sorted by x (a stable copy; caller order is kept among
    equal x, which fixes the accumulation order and hence the exact
    result). Raises InsufficientDataError when fewer than degree + 2
    distinct x values are present.
    """
    pts = sorted(series, key=lambda p: p[0])
    xs = array("d", (float(p[0]) for p in pts))
    ys = array("d", (float(p[1]) for p in pts))
    for x, y in zip(xs, ys):
        if not (isfinite(x) and isfinite(y)):
            raise ValueError("series contains non-finite values")

    distinct = 0
    for i in range(len(xs)):
        if i == 0 or xs[i] != xs[i - 1]:
            distinct += 1
    if distinct < config.degree + 2:
        raise InsufficientDataError(
            f"need at least {config.degree + 2} distinct x values, got {distinct}"
        )

    n = len(xs)
    q = neighborhood_size(n, config.span, config.degree)
    x_min, x_max = xs[0], xs[n - 1]
    m = config.grid_points
    span_x = x_max - x_min
    grid = array("d", (x_min + span_x * (j / (m - 1)) for j in range(m)))
    grid[m - 1] = x_max

    y_hat = _KERNEL.fit_grid(xs, ys, grid, config.degree, q)
    return SmoothedCurve(tuple(CurvePoint(grid[j], y_hat[j]) for j in range(m)))
