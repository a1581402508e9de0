"""
Steklov time averages v_h(·,t) = (1/h) ∫_t^{t+h} v(·,s) ds on the grid

Discrete realization (left-Riemann, h = k*dt):
    restricted  v_h(t_j) = (1/k) Σ_{i<k} v(t_{j+i}),            t_j ∈ I_h (n-k points)
    extended    same mean with the zero extension ṽ; the cell that starts at
                t_{n-1} lies outside the integration range, so samples from
                index n-1 on contribute 0.

Both run on prefix sums, O(1) per output. naive_average is the O(k) oracle.
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from config import KERNEL_CONFIG
from core.errors import GridError, WindowError
from modules.field import Field, TimeGrid

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SteklovParams:
    h: float
    k: int

    def __post_init__(self):
        if int(self.k) != self.k or self.k < 1:
            raise WindowError(f"window length k must be an integer >= 1, got k={self.k}")
        if not (math.isfinite(self.h) and self.h > 0):
            raise WindowError(f"window h must be finite and > 0, got h={self.h}")
        object.__setattr__(self, "k", int(self.k))
        object.__setattr__(self, "h", float(self.h))

    @classmethod
    def from_steps(cls, k: int, dt: float) -> "SteklovParams":
        return cls(k * dt, k)

    @classmethod
    def from_h(cls, h: float, dt: float) -> "SteklovParams":
        """h must be a positive integer multiple of dt."""
        if not (math.isfinite(h) and h > 0):
            raise WindowError(f"window h must be finite and > 0, got h={h}")
        ratio = h / dt
        k = round(ratio)
        if k < 1 or abs(ratio - k) > KERNEL_CONFIG["multiple_rtol"] * max(1.0, ratio):
            raise WindowError(f"h={h} is not a positive integer multiple of dt={dt} (h/dt={ratio:.6g})")
        return cls(k * dt, k)

    def to_dict(self) -> Dict:
        return {"h": self.h, "k": self.k}


def _check_params(time: TimeGrid, params: SteklovParams) -> None:
    if abs(params.h - params.k * time.dt) > 1e-9 * params.h:
        raise WindowError(f"h={params.h} does not equal k*dt = {params.k}*{time.dt}")


def ih_domain(time: TimeGrid, params: SteklovParams) -> TimeGrid:
    """I_h = {t_j : t_j + h ∈ I}, n - k points."""
    _check_params(time, params)
    if params.k >= time.n:
        raise WindowError(f"empty domain: window k={params.k} needs more than n={time.n} time points")
    return TimeGrid(time.t0, time.dt, time.n - params.k)


def _neumaier_cumsum(values: np.ndarray) -> np.ndarray:
    """Compensated running sum along axis 1."""
    total = np.zeros(values.shape[0])
    carry = np.zeros(values.shape[0])
    out = np.empty_like(values)
    for j in range(values.shape[1]):
        x = values[:, j]
        t = total + x
        big = np.abs(total) >= np.abs(x)
        carry += np.where(big, (total - t) + x, (x - t) + total)
        total = t
        out[:, j] = total + carry
    return out


def prefix_sums(values: np.ndarray, compensated: bool = False) -> np.ndarray:
    """
    P[:, j] = Σ_{m<j} values[:, m] over the weighted cells m = 0..n-2.
    Shape (S, n); P[:, 0] = 0.
    """
    values = np.asarray(values, dtype=np.float64)
    out = np.zeros(values.shape)
    if values.shape[1] > 1:
        cells = values[:, :-1]
        out[:, 1:] = _neumaier_cumsum(cells) if compensated else np.cumsum(cells, axis=1)
    return out


def window_means(values: np.ndarray, k: int, extended: bool = False) -> np.ndarray:
    """
    Sliding k-sample means along axis 1 of a (S, n) array.
    Each series is shifted by its first sample before summing and the shift is
    added back per window, so constants come out exact and drift stays bounded.
    """
    values = np.asarray(values, dtype=np.float64)
    n = values.shape[1]
    offset = values[:, :1]
    prefix = prefix_sums(values - offset, compensated=k > KERNEL_CONFIG["compensated_window"])

    if extended:
        lo = np.arange(n)
        hi = np.minimum(lo + k, n - 1)
        hi = np.maximum(hi, lo)
    else:
        if k > n - 1:
            raise WindowError(f"window k={k} exceeds the grid (n={n})")
        lo = np.arange(n - k)
        hi = lo + k
    fraction = (hi - lo) / k
    return (prefix[:, hi] - prefix[:, lo]) / k + offset * fraction


def steklov_average(field: Field, params: SteklovParams) -> Field:
    """Restricted average on I_h."""
    domain = ih_domain(field.time, params)
    means = window_means(field.values, params.k)
    logger.debug("Averaged %s with k=%d on %d points", field.name, params.k, domain.n)
    return field.with_values(means, time=domain, name=f"{field.name}_h")


def steklov_average_extended(field: Field, params: SteklovParams) -> Field:
    """
    Average of the zero-extended field, defined on all of I.
    For v = 1 and k = 2: 0.5 at t_{n-2}, 0 at t_{n-1}.
    """
    _check_params(field.time, params)
    means = window_means(field.values, params.k, extended=True)
    return field.with_values(means, name=f"{field.name}_h")


def pointwise_average(field: Field, spatial_flat: int, t_index: int, params: SteklovParams) -> float:
    """
    One entry of steklov_average_extended, summed directly.
    The last sample carries no weight: samples (2, 4) with k = 2 give 1.0 at
    t_index 0, and a third sample is needed for (2, 4, ·) to give 3.0.
    """
    _check_params(field.time, params)
    if not 0 <= spatial_flat < field.space.size:
        raise GridError(f"spatial index {spatial_flat} outside 0..{field.space.size - 1}")
    if not 0 <= t_index < field.time.n:
        raise GridError(f"time index {t_index} outside 0..{field.time.n - 1}")
    stop = min(t_index + params.k, field.time.n - 1)
    series = field.values[spatial_flat]
    offset = float(series[0])
    window = [float(x) - offset for x in series[t_index:stop]]
    return math.fsum(window) / params.k + offset * (max(stop - t_index, 0) / params.k)


def steklov_time_derivative(field: Field, params: SteklovParams) -> Field:
    """(v(·,t+h) - v(·,t)) / h on I_h."""
    domain = ih_domain(field.time, params)
    v = field.values
    diff = (v[:, params.k:] - v[:, : field.time.n - params.k]) / params.h
    return field.with_values(diff, time=domain, name=f"{field.name}_h_t")


def naive_average(field: Field, params: SteklovParams, extended: bool = False) -> Field:
    """Direct per-window summation; the reference the prefix-sum kernel is checked against."""
    _check_params(field.time, params)
    n, k = field.time.n, params.k
    cells = field.values[:, : n - 1]
    if extended:
        padded = np.concatenate([cells, np.zeros((field.space.size, k))], axis=1)
        means = sliding_window_view(padded, k, axis=1).sum(axis=-1) / k
        return field.with_values(means, name=f"{field.name}_h")
    domain = ih_domain(field.time, params)
    means = sliding_window_view(cells, k, axis=1).sum(axis=-1) / k
    return field.with_values(means, time=domain, name=f"{field.name}_h")
