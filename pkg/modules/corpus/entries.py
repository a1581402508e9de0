"""
Analytic test fields with closed-form oracles

Every builder takes its parameters plus optional grids and returns a
CorpusEntry; entry.resample(space, time) rebuilds the same entry on other grids.
"""

import dataclasses
import math
from functools import partial
from typing import Callable, Dict, Optional, Tuple

import numpy as np

from config import CORPUS_CONFIG, DEFAULT_GRID
from core.errors import CorpusError, GridError
from modules.field import Field, SpaceGrid, TimeGrid, make_field
from modules.operators import SteklovParams, ih_domain, parse_exponent
from .staircase import cantor_staircase

SMOOTHNESS_CLASSES = ("constant", "polynomial", "smooth-periodic", "step", "cantor", "random-smooth")

AverageOracle = Callable[[float], Field]
BochnerOracle = Callable[[object, object], float]


@dataclasses.dataclass(frozen=True)
class CorpusEntry:
    name: str
    field: Field
    smoothness_class: str
    rebuild: Callable[[SpaceGrid, TimeGrid], "CorpusEntry"] = dataclasses.field(repr=False, compare=False)
    params: Dict[str, float] = dataclasses.field(default_factory=dict)
    oracle_average: Optional[AverageOracle] = dataclasses.field(default=None, repr=False, compare=False)
    oracle_average_discrete: Optional[AverageOracle] = dataclasses.field(default=None, repr=False, compare=False)
    oracle_bochner: Optional[BochnerOracle] = dataclasses.field(default=None, repr=False, compare=False)
    oracle_dt_constant: Optional[float] = None
    declared_jumps: Tuple[float, ...] = ()

    def __post_init__(self):
        if self.smoothness_class not in SMOOTHNESS_CLASSES:
            raise CorpusError(f"unknown smoothness class {self.smoothness_class!r}")

    def resample(self, space: SpaceGrid, time: TimeGrid) -> "CorpusEntry":
        return self.rebuild(space, time)

    def __str__(self):
        return f"{self.name} [{self.smoothness_class}] {self.field.space.shape} x {self.field.time.n}"


# ═══════════════════════════════════════════════════════════════
# 📐 GRIDS AND SHARED PIECES
# ═══════════════════════════════════════════════════════════════

def default_time_grid() -> TimeGrid:
    return TimeGrid.over(DEFAULT_GRID["t0"], DEFAULT_GRID["t_end"], DEFAULT_GRID["time_points"])


def default_space_grid(ndim: int = 1, points: Optional[int] = None) -> SpaceGrid:
    return SpaceGrid.uniform(
        points or DEFAULT_GRID["space_points"],
        DEFAULT_GRID["space_origin"],
        DEFAULT_GRID["space_length"],
        ndim,
    )


def _grids(space: Optional[SpaceGrid], time: Optional[TimeGrid]):
    return space or default_space_grid(), time or default_time_grid()


def _gaussian(x: np.ndarray, center: float, width: float) -> np.ndarray:
    """Product of 1-D Gaussians over the columns of x (size, ndim)."""
    return np.exp(-0.5 * np.sum(((x - center) / width) ** 2, axis=1))


def _oracle_field(field: Field, h: float, time_factor, profile: np.ndarray, name: str) -> Field:
    """profile(x) ⊗ time_factor(t, params) on I_h."""
    params = SteklovParams.from_h(h, field.time.dt)
    domain = ih_domain(field.time, params)
    factor = np.asarray(time_factor(domain.times(), params), dtype=np.float64)
    values = np.outer(profile, np.broadcast_to(factor, (domain.n,)))
    return Field(field.space, domain, values, name)


def _measure_factor(space: SpaceGrid, q: float) -> float:
    return 1.0 if math.isinf(q) else space.measure ** (1.0 / q)


def _sin_window(omega: float, continuous: bool):
    """Window mean of sin(ω s) over [t, t+h]."""
    def continuous_mean(t, p):
        return (np.cos(omega * t) - np.cos(omega * (t + p.h))) / (omega * p.h)

    def discrete_mean(t, p):
        dt = p.h / p.k
        ratio = math.sin(p.k * omega * dt / 2) / (p.k * math.sin(omega * dt / 2))
        return np.sin(omega * (t + (p.k - 1) * dt / 2)) * ratio

    return continuous_mean if continuous else discrete_mean


def _cos_window(omega: float, continuous: bool):
    """Window mean of cos(ω s) over [t, t+h]."""
    def continuous_mean(t, p):
        return (np.sin(omega * (t + p.h)) - np.sin(omega * t)) / (omega * p.h)

    def discrete_mean(t, p):
        dt = p.h / p.k
        ratio = math.sin(p.k * omega * dt / 2) / (p.k * math.sin(omega * dt / 2))
        return np.cos(omega * (t + (p.k - 1) * dt / 2)) * ratio

    return continuous_mean if continuous else discrete_mean


# ═══════════════════════════════════════════════════════════════
# 🧪 ENTRIES
# ═══════════════════════════════════════════════════════════════

def entry_constant(c: Optional[float] = None, space: Optional[SpaceGrid] = None,
                   time: Optional[TimeGrid] = None) -> CorpusEntry:
    c = CORPUS_CONFIG["constant"] if c is None else float(c)
    if not math.isfinite(c):
        raise CorpusError(f"constant must be finite, got {c}")
    space, time = _grids(space, time)
    field = make_field(space, time, lambda x, t: c, "constant")

    def average(h: float) -> Field:
        return _oracle_field(field, h, lambda t, p: np.ones_like(t), np.full(space.size, c), "constant_h")

    def bochner(q, r) -> float:
        q, r = parse_exponent(q), parse_exponent(r)
        length = 1.0 if math.isinf(r) else time.length ** (1.0 / r)
        return abs(c) * _measure_factor(space, q) * length

    return CorpusEntry(
        name="constant", field=field, smoothness_class="constant",
        rebuild=lambda s, t: entry_constant(c, s, t), params={"c": c},
        oracle_average=average, oracle_average_discrete=average,
        oracle_bochner=bochner, oracle_dt_constant=0.0,
    )


def entry_linear_t(space: Optional[SpaceGrid] = None, time: Optional[TimeGrid] = None) -> CorpusEntry:
    """v(x, t) = t"""
    space, time = _grids(space, time)
    if time.t0 < 0:
        raise CorpusError(f"linear_t expects t0 >= 0, got {time.t0}")
    field = make_field(space, time, lambda x, t: t, "linear_t")
    ones = np.ones(space.size)

    def average(h: float) -> Field:
        return _oracle_field(field, h, lambda t, p: t + p.h / 2, ones, "linear_t_h")

    def average_discrete(h: float) -> Field:
        return _oracle_field(field, h, lambda t, p: t + (p.h - p.h / p.k) / 2, ones, "linear_t_h")

    def bochner(q, r) -> float:
        q, r = parse_exponent(q), parse_exponent(r)
        a, b = time.t0, time.t_end
        if math.isinf(r):
            return _measure_factor(space, q) * b
        return _measure_factor(space, q) * ((b ** (r + 1) - a ** (r + 1)) / (r + 1)) ** (1.0 / r)

    return CorpusEntry(
        name="linear_t", field=field, smoothness_class="polynomial",
        rebuild=lambda s, t: entry_linear_t(s, t),
        oracle_average=average, oracle_average_discrete=average_discrete,
        oracle_bochner=bochner, oracle_dt_constant=0.5,
    )


def entry_sin_gauss(omega: Optional[float] = None, space: Optional[SpaceGrid] = None,
                    time: Optional[TimeGrid] = None, name: str = "sin_gauss") -> CorpusEntry:
    """v(x, t) = sin(ωt)·G(x), G a Gaussian bump centred in E"""
    omega = CORPUS_CONFIG["sin_omega"] if omega is None else float(omega)
    if not (math.isfinite(omega) and omega > 0):
        raise CorpusError(f"omega must be finite and > 0, got {omega}")
    space, time = _grids(space, time)
    center, width = CORPUS_CONFIG["gauss_center"], CORPUS_CONFIG["gauss_width"]
    profile = _gaussian(space.points(), center, width)
    field = make_field(space, time, lambda x, t: math.sin(omega * t) * profile, name)

    def average(h: float) -> Field:
        return _oracle_field(field, h, _sin_window(omega, True), profile, f"{name}_h")

    def average_discrete(h: float) -> Field:
        return _oracle_field(field, h, _sin_window(omega, False), profile, f"{name}_h")

    return CorpusEntry(
        name=name, field=field, smoothness_class="smooth-periodic",
        rebuild=lambda s, t: entry_sin_gauss(omega, s, t, name), params={"omega": omega},
        oracle_average=average, oracle_average_discrete=average_discrete,
        oracle_dt_constant=0.6 * omega * float(profile.max()),
    )


def entry_step(t_jump: Optional[float] = None, space: Optional[SpaceGrid] = None,
               time: Optional[TimeGrid] = None, height: Optional[float] = None) -> CorpusEntry:
    """Right-continuous unit step in t: v = height for t >= t_jump, 0 before."""
    t_jump = CORPUS_CONFIG["step_time"] if t_jump is None else float(t_jump)
    height = CORPUS_CONFIG["step_height"] if height is None else float(height)
    space, time = _grids(space, time)
    try:
        jump_index = time.index_of(t_jump)
    except GridError as e:
        raise CorpusError(f"step time must be a grid time: {e}") from e
    if not 0 < jump_index < time.n - 1:
        raise CorpusError(f"step time {t_jump} must be an interior grid time")
    field = make_field(space, time, lambda x, t: height if time.index_below(t) >= jump_index else 0.0, "step")
    profile = np.full(space.size, height)

    def ramp(t, p):
        return np.clip((t + p.h - t_jump) / p.h, 0.0, 1.0)

    def average(h: float) -> Field:
        return _oracle_field(field, h, ramp, profile, "step_h")

    def bochner(q, r) -> float:
        q, r = parse_exponent(q), parse_exponent(r)
        length = 1.0 if math.isinf(r) else (time.t_end - t_jump) ** (1.0 / r)
        return abs(height) * _measure_factor(space, q) * length

    return CorpusEntry(
        name="step", field=field, smoothness_class="step",
        rebuild=lambda s, t: entry_step(t_jump, s, t, height), params={"t_jump": t_jump, "height": height},
        oracle_average=average, oracle_average_discrete=average,
        oracle_bochner=bochner, oracle_dt_constant=0.5, declared_jumps=(t_jump,),
    )


def entry_cantor(level: Optional[int] = None, space: Optional[SpaceGrid] = None,
                 time: Optional[TimeGrid] = None) -> CorpusEntry:
    """Space-constant Cantor staircase G_L((t - t0) / |I|)."""
    level = CORPUS_CONFIG["cantor_level"] if level is None else level
    if int(level) != level or not 1 <= level <= CORPUS_CONFIG["cantor_max_level"]:
        raise CorpusError(f"cantor level must be in 1..{CORPUS_CONFIG['cantor_max_level']}, got {level}")
    level = int(level)
    space, time = _grids(space, time)
    field = make_field(
        space, time,
        lambda x, t: float(cantor_staircase(np.array([(t - time.t0) / time.length]), level)[0]),
        "cantor",
    )
    return CorpusEntry(
        name="cantor", field=field, smoothness_class="cantor",
        rebuild=lambda s, t: entry_cantor(level, s, t), params={"level": level},
    )


def _random_modes(seed: int, modes: int):
    rng = np.random.default_rng(seed)
    m = np.arange(1, modes + 1)
    omegas = m * math.pi / 2
    cos_coeffs = rng.standard_normal(modes) / m ** 2
    sin_coeffs = rng.standard_normal(modes) / m ** 2
    centers = rng.uniform(0.25, 0.75, modes)
    widths = rng.uniform(0.08, 0.2, modes)
    return omegas, cos_coeffs, sin_coeffs, centers, widths


def entry_random_smooth(seed: Optional[int] = None, modes: Optional[int] = None,
                        space: Optional[SpaceGrid] = None, time: Optional[TimeGrid] = None) -> CorpusEntry:
    """
    Σ_m (a_m cos ω_m t + b_m sin ω_m t)·B_m(x): seeded coefficients, Gaussian
    spatial bumps B_m.
    """
    seed = CORPUS_CONFIG["seed"] if seed is None else int(seed)
    modes = CORPUS_CONFIG["random_modes"] if modes is None else modes
    if int(modes) != modes or modes < 1:
        raise CorpusError(f"modes must be an integer >= 1, got {modes}")
    modes = int(modes)
    space, time = _grids(space, time)
    omegas, a, b, centers, widths = _random_modes(seed, modes)
    x = space.points()
    bumps = [_gaussian(x, c, w) for c, w in zip(centers, widths)]

    def sampler(_x, t):
        return sum((a[m] * math.cos(omegas[m] * t) + b[m] * math.sin(omegas[m] * t)) * bumps[m]
                   for m in range(modes))

    name = f"random_smooth_seed{seed}"
    field = make_field(space, time, sampler, name)

    def windowed(continuous: bool):
        def average(h: float) -> Field:
            params = SteklovParams.from_h(h, time.dt)
            domain = ih_domain(time, params)
            t = domain.times()
            values = np.zeros((space.size, domain.n))
            for m in range(modes):
                factor = (a[m] * _cos_window(omegas[m], continuous)(t, params)
                          + b[m] * _sin_window(omegas[m], continuous)(t, params))
                values += np.outer(bumps[m], factor)
            return Field(space, domain, values, f"{name}_h")
        return average

    slope_bound = sum((abs(a[m]) + abs(b[m])) * omegas[m] * float(bumps[m].max()) for m in range(modes))
    return CorpusEntry(
        name=name, field=field, smoothness_class="random-smooth",
        rebuild=partial(_rebuild_random, seed, modes), params={"seed": seed, "modes": modes},
        oracle_average=windowed(True), oracle_average_discrete=windowed(False),
        oracle_dt_constant=0.6 * slope_bound,
    )


def _rebuild_random(seed: int, modes: int, space: SpaceGrid, time: TimeGrid) -> CorpusEntry:
    return entry_random_smooth(seed, modes, space, time)


def entry_sin_gauss_2d(space: Optional[SpaceGrid] = None, time: Optional[TimeGrid] = None) -> CorpusEntry:
    """The 2-D smoke-test field: sin(ωt) times a Gaussian on [0,1]²."""
    space = space or default_space_grid(ndim=2, points=CORPUS_CONFIG["grid_2d_points"])
    return entry_sin_gauss(None, space, time or default_time_grid(), name="sin_gauss_2d")
