"""
Coefficient-growth reports: evidence of divergence, never a verdict.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Union

import numpy as np

from ..consts import DEFAULT_GROWTH_WINDOW, SUPER_GEOMETRIC_SLOPE
from ..diffeo import log_series1
from ..enums import GrowthTrend, Restriction
from ..errors import OutOfRange
from ..series import LambdaPoly, Series1, Series2


@dataclass(frozen=True)
class GrowthReport:
    """Per-degree max |coefficient| for degrees 1..N and its root test."""
    degrees: List[int]
    values: List[float]
    root_test: List[float]
    window: int
    window_starts: List[int]
    window_max: List[float]
    trend: GrowthTrend

    @property
    def label(self) -> str:
        return self.trend.value

    def window_of(self, degree: int) -> int:
        """Index of the block containing a degree."""
        return (degree - 1) // self.window

    def blocks_from(self, degree: int) -> List[float]:
        """Block maxima of the blocks starting at or after `degree`."""
        return [m for s, m in zip(self.window_starts, self.window_max) if s >= degree]

    def to_record(self) -> Dict[str, Any]:
        return {
            'degrees': self.degrees,
            'values': self.values,
            'root_test': self.root_test,
            'window': self.window,
            'window_starts': self.window_starts,
            'window_max': self.window_max,
            'trend': self.label,
        }


def _magnitude(c) -> float:
    if isinstance(c, LambdaPoly):
        if c.degree > 0:
            raise OutOfRange("growth reports need rational coefficients")
        c = c.coefficient(0)
    return float(abs(Fraction(c)))


def _per_degree(series: Union[Series1, Series2], restriction: Restriction) -> List[float]:
    if isinstance(series, Series2):
        if restriction is Restriction.X0:
            series = series.restrict_x0()
        elif restriction is Restriction.DIAGONAL:
            series = series.diagonal()
        else:
            return [max(_magnitude(c) for c in layer) for layer in series.layers]
    return [_magnitude(c) for c in series.coeffs]


def classify_trend(degrees: np.ndarray, root_test: np.ndarray, window_max: List[float]) -> GrowthTrend:
    """Strictly increasing block maxima count as growth; a steep fit as super-geometric."""
    increasing = len(window_max) >= 2 and all(b > a for a, b in zip(window_max, window_max[1:]))
    if not increasing:
        return GrowthTrend.GEOMETRIC_BOUNDED
    live = root_test > 0
    if live.sum() >= 2:
        slope = np.polyfit(degrees[live], root_test[live], 1)[0]
        if slope >= SUPER_GEOMETRIC_SLOPE:
            return GrowthTrend.SUPER_GEOMETRIC
    return GrowthTrend.INCREASING_ROOT_TEST


def growth_report(series: Union[Series1, Series2], restriction=Restriction.NONE,
                  window: int = DEFAULT_GROWTH_WINDOW) -> GrowthReport:
    """
    Coefficient-growth report of a series.

    Args:
        series: One- or two-variable series; a Series2 is reduced per total
            degree by the largest |coefficient| after the restriction
        restriction: Curve to restrict a Series2 to first
        window: Width of the disjoint blocks, starting at degree 1

    Returns:
        GrowthReport: per-degree magnitudes, root test, block maxima and trend
    """
    restriction = Restriction(restriction)
    if window < 1:
        raise OutOfRange(f"window must be >= 1, got {window}")
    magnitudes = _per_degree(series, restriction)[1:]
    degrees = np.arange(1, len(magnitudes) + 1)
    values = np.array(magnitudes, dtype=float)
    root_test = np.power(values, 1.0 / degrees) if len(values) else values
    starts = list(range(1, len(magnitudes) + 1, window))
    window_max = [float(root_test[s - 1:s - 1 + window].max()) for s in starts]
    return GrowthReport(
        degrees=[int(d) for d in degrees],
        values=[float(v) for v in values],
        root_test=[float(r) for r in root_test],
        window=window,
        window_starts=starts,
        window_max=window_max,
        trend=classify_trend(degrees, root_test, window_max),
    )


def generator_on_axis(w: Series2, order: int) -> Series1:
    """
    w_hat(0, y) through the one-variable generator of y -> y + y^2 w(0, y).

    On x = 0 the germ phi_{0,w} acts as that map, so its generator is
    y^2 w_hat(0, y) d/dy.
    """
    axis = w.restrict_x0().at_order(order)
    f = Series1(order + 2, [0, 1] + list(axis.coeffs))
    generator = log_series1(f)
    return Series1(order, generator.coeffs[2:])
