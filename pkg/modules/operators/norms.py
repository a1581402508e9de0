"""
Discrete L^q(E) norms and Bochner norms L^r(I, L^q(E))

Time integrals use left-Riemann quadrature: the last grid sample carries no
weight. q = inf and r = inf are exact maxima over samples.
"""

import math
from dataclasses import dataclass
from typing import Dict, Union

import numpy as np

from core.errors import ExponentError, GridError
from modules.field import Field, SpaceGrid

INF = math.inf
Exponent = Union[float, int, str]


def parse_exponent(value: Exponent) -> float:
    """Accept 1, 2.5, "2", "inf", "∞"; reject anything below 1."""
    if isinstance(value, str):
        text = value.strip().lower()
        if text in ("inf", "infinity", "∞", "+inf"):
            return INF
        try:
            value = float(text)
        except ValueError as e:
            raise ExponentError(f"exponent {value!r} is not a number or 'inf'") from e
    value = float(value)
    if math.isnan(value) or value < 1:
        raise ExponentError(f"exponent must be >= 1 or inf, got {value}")
    return value


def format_exponent(value: float) -> Union[float, str]:
    """JSON-safe form: inf becomes the string "inf"."""
    return "inf" if math.isinf(value) else float(value)


@dataclass(frozen=True)
class BochnerSpec:
    q: float
    r: float

    def __post_init__(self):
        object.__setattr__(self, "q", parse_exponent(self.q))
        object.__setattr__(self, "r", parse_exponent(self.r))

    def to_dict(self) -> Dict:
        return {"q": format_exponent(self.q), "r": format_exponent(self.r)}

    def __str__(self) -> str:
        return f"L^{format_exponent(self.r)}(I, L^{format_exponent(self.q)})"


def lq_profile(values: np.ndarray, space: SpaceGrid, q: Exponent) -> np.ndarray:
    """‖v(·,t_j)‖_{L^q(E)} for every column of a (space.size, n) array."""
    q = parse_exponent(q)
    magnitude = np.abs(np.asarray(values, dtype=np.float64))
    if math.isinf(q):
        return magnitude.max(axis=0)
    if q == 1:
        return magnitude.sum(axis=0) * space.cell_volume
    # scale out the max so |v|^q neither overflows nor underflows
    peak = magnitude.max(axis=0)
    safe = np.where(peak > 0, peak, 1.0)
    ratio = magnitude / safe
    return peak * (np.sum(ratio ** q, axis=0) * space.cell_volume) ** (1.0 / q)


def bochner_from_profile(profile: np.ndarray, dt: float, r: Exponent) -> float:
    r = parse_exponent(r)
    profile = np.asarray(profile, dtype=np.float64)
    if math.isinf(r):
        return float(profile.max()) if profile.size else 0.0
    weighted = profile[:-1]
    if weighted.size == 0:
        return 0.0
    peak = float(weighted.max())
    if peak == 0.0:
        return 0.0
    return peak * float(np.sum((weighted / peak) ** r) * dt) ** (1.0 / r)


def lq_space_norm(field: Field, t_index: int, q: Exponent) -> float:
    if not 0 <= t_index < field.time.n:
        raise GridError(f"time index {t_index} outside 0..{field.time.n - 1}")
    return float(lq_profile(field.values[:, t_index:t_index + 1], field.space, q)[0])


def bochner_norm(field: Field, spec: BochnerSpec) -> float:
    return bochner_from_profile(lq_profile(field.values, field.space, spec.q), field.time.dt, spec.r)


def ess_sup_time(field: Field, q: Exponent) -> float:
    return float(lq_profile(field.values, field.space, q).max())


def cumulative_norm_V(field: Field, spec: BochnerSpec, t_index: int) -> float:
    """V(t_j) = Σ_{m<j} ‖v(·,t_m)‖^r dt, the r-th power of the norm over [t0, t_j)."""
    if math.isinf(spec.r):
        raise ExponentError("cumulative norm V needs a finite r")
    if not 0 <= t_index < field.time.n:
        raise GridError(f"time index {t_index} outside 0..{field.time.n - 1}")
    profile = lq_profile(field.values[:, :t_index], field.space, spec.q)
    return float(np.sum(profile ** spec.r) * field.time.dt)
