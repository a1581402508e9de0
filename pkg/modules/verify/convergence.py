"""
Convergence-order fitting
"""

from typing import Optional, Sequence, Tuple

import numpy as np

from config import TOLERANCE_CONFIG
from core.errors import ConvergenceError


def usable_points(abscissa: Sequence[float], errors: Sequence[float],
                  scale: Optional[float] = None) -> Tuple[np.ndarray, np.ndarray]:
    """Drop points with abscissa <= 0 or error at/below the floor (order_floor * scale)."""
    x = np.asarray(abscissa, dtype=np.float64)
    e = np.asarray(errors, dtype=np.float64)
    if x.shape != e.shape:
        raise ConvergenceError(f"{x.size} abscissa values but {e.size} errors")
    if scale is None:
        scale = float(e.max()) if e.size else 0.0
    floor = TOLERANCE_CONFIG["order_floor"] * scale
    keep = (x > 0) & (e > floor)
    return x[keep], e[keep]


def estimate_order(h_list: Sequence[float], errors: Sequence[float], scale: Optional[float] = None) -> float:
    """Least-squares slope of log(error) against log(h)."""
    if len(h_list) < 3:
        raise ConvergenceError(f"need >= 3 points to fit an order, got {len(h_list)}")
    x, e = usable_points(h_list, errors, scale)
    if x.size < 3:
        raise ConvergenceError(f"only {x.size} points above the error floor, need >= 3")
    slope, _ = np.polyfit(np.log(x), np.log(e), 1)
    return float(slope)


def decreases(errors: Sequence[float], scale: Optional[float] = None) -> bool:
    """
    Errors fall (or sit at the floor) as the step shrinks: every step may
    rise by at most monotone_slack, and the last error is below the first.
    """
    e = np.asarray(errors, dtype=np.float64)
    if scale is None:
        scale = float(e.max()) if e.size else 0.0
    floor = TOLERANCE_CONFIG["order_floor"] * scale
    slack = TOLERANCE_CONFIG["monotone_slack"]
    steps_ok = all(b <= a * (1.0 + slack) + floor for a, b in zip(e, e[1:]))
    return bool(steps_ok and e[-1] <= e[0] + floor)
