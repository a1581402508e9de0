"""
Uniform time and space lattices
"""

import math
from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np

from core.errors import GridError

MAX_SPACE_DIM = 3


def _snap_index(x: float) -> int:
    """Floor that forgives round-off right below an integer."""
    nearest = round(x)
    if abs(x - nearest) <= 1e-9 * max(1.0, abs(x)):
        return int(nearest)
    return int(math.floor(x))


@dataclass(frozen=True)
class TimeGrid:
    """
    Points t_j = t0 + j*dt, 0 <= j < n, on the closed interval I = [t0, t0 + (n-1)*dt].
    n = 1 only describes the shrunk domain of the widest window; fields need n >= 2.
    """

    t0: float
    dt: float
    n: int

    def __post_init__(self):
        if not (math.isfinite(self.t0) and math.isfinite(self.dt)):
            raise GridError(f"time grid needs finite t0 and dt, got t0={self.t0}, dt={self.dt}")
        if self.dt <= 0:
            raise GridError(f"time step must be > 0, got dt={self.dt}")
        if int(self.n) != self.n or self.n < 1:
            raise GridError(f"time grid needs an integer count n >= 1, got n={self.n}")
        object.__setattr__(self, "t0", float(self.t0))
        object.__setattr__(self, "dt", float(self.dt))
        object.__setattr__(self, "n", int(self.n))

    @classmethod
    def over(cls, t0: float, t_end: float, n: int) -> "TimeGrid":
        if n < 2 or t_end <= t0:
            raise GridError(f"cannot lay {n} points on [{t0}, {t_end}]")
        return cls(t0, (t_end - t0) / (n - 1), n)

    def require_interval(self) -> "TimeGrid":
        """Sampled fields live on a proper interval: n >= 2."""
        if self.n < 2:
            raise GridError(f"a sampled field needs n >= 2 time points, got n={self.n}")
        return self

    @property
    def t_end(self) -> float:
        return self.t0 + (self.n - 1) * self.dt

    @property
    def length(self) -> float:
        return (self.n - 1) * self.dt

    def t(self, j: int) -> float:
        return self.t0 + j * self.dt

    def times(self) -> np.ndarray:
        return self.t0 + self.dt * np.arange(self.n)

    def contains(self, t: float) -> bool:
        return self.t0 <= t <= self.t_end

    def index_below(self, t: float) -> int:
        """Grid index nearest below t (t must lie in I)."""
        return min(_snap_index((t - self.t0) / self.dt), self.n - 1)

    def index_of(self, t: float) -> int:
        """Index of a time that must sit on the grid."""
        x = (t - self.t0) / self.dt
        j = round(x)
        if abs(x - j) > 1e-9 * max(1.0, abs(x)) or not 0 <= j < self.n:
            raise GridError(f"t={t} is not a grid time of {self}")
        return int(j)

    def refine(self, factor: int) -> "TimeGrid":
        if factor < 1:
            raise GridError(f"refinement factor must be >= 1, got {factor}")
        return TimeGrid(self.t0, self.dt / factor, (self.n - 1) * factor + 1)

    def to_dict(self) -> Dict:
        return {"t0": self.t0, "dt": self.dt, "n": self.n}

    @classmethod
    def from_dict(cls, data: Dict) -> "TimeGrid":
        try:
            return cls(float(data["t0"]), float(data["dt"]), int(data["n"]))
        except (KeyError, TypeError) as e:
            raise GridError(f"time grid entry is missing or malformed: {e}") from e


@dataclass(frozen=True)
class SpaceGrid:
    """Rectangular lattice on E, 1 to 3 axes, C-order flattening of points"""

    shape: Tuple[int, ...]
    spacing: Tuple[float, ...]
    origin: Tuple[float, ...]

    def __post_init__(self):
        shape = tuple(int(s) for s in self.shape)
        spacing = tuple(float(s) for s in self.spacing)
        origin = tuple(float(o) for o in self.origin)
        if not 1 <= len(shape) <= MAX_SPACE_DIM:
            raise GridError(f"space grid must have 1 to {MAX_SPACE_DIM} axes, got {len(shape)}")
        if len(spacing) != len(shape) or len(origin) != len(shape):
            raise GridError(f"shape {shape}, spacing {spacing} and origin {origin} disagree on ndim")
        if any(s < 1 for s in shape):
            raise GridError(f"every axis needs at least one point, got shape {shape}")
        if any(not (math.isfinite(h) and h > 0) for h in spacing):
            raise GridError(f"spacings must be finite and > 0, got {spacing}")
        if any(not math.isfinite(o) for o in origin):
            raise GridError(f"origin must be finite, got {origin}")
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "spacing", spacing)
        object.__setattr__(self, "origin", origin)

    @classmethod
    def uniform(cls, points: int, origin: float = 0.0, length: float = 1.0, ndim: int = 1) -> "SpaceGrid":
        if points < 2:
            raise GridError(f"need at least 2 points per axis, got {points}")
        step = length / (points - 1)
        return cls((points,) * ndim, (step,) * ndim, (origin,) * ndim)

    @property
    def ndim(self) -> int:
        return len(self.shape)

    @property
    def size(self) -> int:
        return int(np.prod(self.shape))

    @property
    def cell_volume(self) -> float:
        return float(np.prod(self.spacing))

    @property
    def measure(self) -> float:
        return self.size * self.cell_volume

    def axes(self) -> List[np.ndarray]:
        return [o + h * np.arange(s) for s, h, o in zip(self.shape, self.spacing, self.origin)]

    def points(self) -> np.ndarray:
        """Coordinates of every point, shape (size, ndim), in flat-index order."""
        mesh = np.meshgrid(*self.axes(), indexing="ij")
        return np.stack([m.ravel() for m in mesh], axis=-1)

    def refine(self, factor: int) -> "SpaceGrid":
        if factor < 1:
            raise GridError(f"refinement factor must be >= 1, got {factor}")
        shape = tuple((s - 1) * factor + 1 for s in self.shape)
        return SpaceGrid(shape, tuple(h / factor for h in self.spacing), self.origin)

    def to_dict(self) -> Dict:
        return {
            "ndim": self.ndim,
            "shape": list(self.shape),
            "spacing": list(self.spacing),
            "origin": list(self.origin),
        }

    @classmethod
    def from_dict(cls, data: Dict) -> "SpaceGrid":
        try:
            grid = cls(tuple(data["shape"]), tuple(data["spacing"]), tuple(data["origin"]))
        except (KeyError, TypeError) as e:
            raise GridError(f"space grid entry is missing or malformed: {e}") from e
        if "ndim" in data and int(data["ndim"]) != grid.ndim:
            raise GridError(f"ndim={data['ndim']} does not match shape {grid.shape}")
        return grid
