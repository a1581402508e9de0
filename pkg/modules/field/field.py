"""
Sampled space-time fields v(x, t) and their zero extension outside I
"""

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from core.errors import FieldError
from .grids import SpaceGrid, TimeGrid

Sampler = Callable[[np.ndarray, float], np.ndarray]


def _frozen_array(values, expected_shape) -> np.ndarray:
    arr = np.array(values, dtype=np.float64)
    if arr.size != int(np.prod(expected_shape)):
        raise FieldError(
            f"values length {arr.size} does not match grid product {int(np.prod(expected_shape))}"
        )
    arr = arr.reshape(expected_shape)
    if not np.all(np.isfinite(arr)):
        flat = int(np.flatnonzero(~np.isfinite(arr.ravel()))[0])
        raise FieldError(f"non-finite value {arr.ravel()[flat]} at flat index {flat}")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class SpaceSlice:
    """One element of L^q(E): values over the space grid"""

    space: SpaceGrid
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen_array(self.values, (self.space.size,)))

    @classmethod
    def zeros(cls, space: SpaceGrid) -> "SpaceSlice":
        return cls(space, np.zeros(space.size))

    @classmethod
    def constant(cls, space: SpaceGrid, value: float) -> "SpaceSlice":
        return cls(space, np.full(space.size, float(value)))


@dataclass(frozen=True)
class Field:
    """
    v sampled on SpaceGrid x TimeGrid.
    values has shape (space.size, time.n); its C-order ravel is the
    space-major/time-minor flat layout (flat index = spatial_flat * n + j).
    """

    space: SpaceGrid
    time: TimeGrid
    values: np.ndarray
    name: str = "field"

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen_array(self.values, (self.space.size, self.time.n)))

    @property
    def max_abs(self) -> float:
        return float(np.max(np.abs(self.values)))

    def with_values(self, values, time: Optional[TimeGrid] = None, name: Optional[str] = None) -> "Field":
        return Field(self.space, time or self.time, values, name or self.name)


def make_field(space: SpaceGrid, time: TimeGrid, sampler: Sampler, name: str = "field") -> Field:
    """
    Sample v on every grid point.
    sampler(x, t) receives x of shape (size, ndim) and a scalar t and returns
    one value per spatial point (a scalar broadcasts).
    """
    time.require_interval()
    x = space.points()
    values = np.empty((space.size, time.n))
    for j, t in enumerate(time.times()):
        column = np.broadcast_to(np.asarray(sampler(x, float(t)), dtype=np.float64), (space.size,))
        bad = np.flatnonzero(~np.isfinite(column))
        if bad.size:
            s = int(bad[0])
            raise FieldError(
                f"sampler returned {column[s]} at spatial index {s} (x={tuple(x[s])}), t={t} (j={j})"
            )
        values[:, j] = column
    return Field(space, time, values, name)


def sample_extended(field: Field, spatial_flat: int, t: float) -> float:
    """
    Zero extension: the left-constant interpolant of v inside I, 0 outside.
    """
    if not 0 <= spatial_flat < field.space.size:
        raise FieldError(f"spatial index {spatial_flat} outside 0..{field.space.size - 1}")
    if not field.time.contains(t):
        return 0.0
    return float(field.values[spatial_flat, field.time.index_below(t)])
