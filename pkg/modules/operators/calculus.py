"""
Weak spatial derivatives, test-function pairing, cumulative time integrals
and integration by parts on the grid
"""

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from core.errors import FieldError, GridError
from modules.field import Field, SpaceGrid, SpaceSlice, TimeGrid


# ═══════════════════════════════════════════════════════════════
# 🧪 TEST FUNCTIONS
# ═══════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class TestFunction:
    """φ on the space grid; the outermost layer of cells must be exactly 0."""

    __test__ = False  # keep pytest from collecting this class

    space: SpaceGrid
    values: np.ndarray

    def __post_init__(self):
        values = SpaceSlice(self.space, self.values).values
        grid = values.reshape(self.space.shape)
        for axis in range(self.space.ndim):
            for edge in (0, -1):
                layer = np.take(grid, edge, axis=axis)
                if np.any(layer != 0.0):
                    raise FieldError(f"test function is nonzero on the boundary layer of axis {axis}")
        object.__setattr__(self, "values", values)


def _bump_frame(space: SpaceGrid, center: Optional[Sequence[float]], radius: Optional[Sequence[float]]):
    if any(s < 3 for s in space.shape):
        raise FieldError(f"bump test functions need >= 3 points per axis, got shape {space.shape}")
    extents = [(s - 1) * h for s, h in zip(space.shape, space.spacing)]
    if center is None:
        center = [o + e / 2 for o, e in zip(space.origin, extents)]
    if radius is None:
        radius = [0.4 * e for e in extents]
    return space.points(), np.asarray(center, dtype=np.float64), np.asarray(radius, dtype=np.float64)


def _bump_1d(s: np.ndarray) -> np.ndarray:
    inside = np.abs(s) < 1.0
    out = np.zeros_like(s)
    out[inside] = np.exp(-1.0 / (1.0 - s[inside] ** 2))
    return out


def bump_test_function(space: SpaceGrid, center=None, radius=None) -> TestFunction:
    """Tensor product of exp(-1/(1-s²)) bumps, supported strictly inside E."""
    points, center, radius = _bump_frame(space, center, radius)
    s = (points - center) / radius
    values = np.prod(_bump_1d(s), axis=1)
    return TestFunction(space, values)


def bump_gradient(space: SpaceGrid, axis: int, center=None, radius=None) -> TestFunction:
    """Analytic ∂φ/∂x_axis of bump_test_function."""
    if not 0 <= axis < space.ndim:
        raise FieldError(f"axis {axis} outside 0..{space.ndim - 1}")
    points, center, radius = _bump_frame(space, center, radius)
    s = (points - center) / radius
    phi = np.prod(_bump_1d(s), axis=1)
    sa = s[:, axis]
    inside = np.abs(sa) < 1.0
    factor = np.zeros_like(sa)
    factor[inside] = -2.0 * sa[inside] / (1.0 - sa[inside] ** 2) ** 2 / radius[axis]
    return TestFunction(space, phi * factor)


def pair(slice_: SpaceSlice, phi: TestFunction) -> float:
    """⟨u | φ⟩ = Σ u·φ·ΔV"""
    if slice_.space != phi.space:
        raise GridError(f"cannot pair slices on different space grids: {slice_.space} vs {phi.space}")
    return float(np.dot(slice_.values, phi.values) * phi.space.cell_volume)


# ═══════════════════════════════════════════════════════════════
# 📐 SPATIAL DERIVATIVES
# ═══════════════════════════════════════════════════════════════

def derivative_along(values: np.ndarray, space: SpaceGrid, axis: int) -> np.ndarray:
    """
    Second-order finite difference along one spatial axis of a (space.size, n)
    array: central inside, one-sided at the two ends.
    """
    if not 0 <= axis < space.ndim:
        raise FieldError(f"axis {axis} outside 0..{space.ndim - 1}")
    if space.shape[axis] < 3:
        raise FieldError(f"axis {axis} has {space.shape[axis]} points, need >= 3 for a derivative")
    n = values.shape[1]
    grid = np.asarray(values, dtype=np.float64).reshape(space.shape + (n,))
    d = np.gradient(grid, space.spacing[axis], axis=axis, edge_order=2)
    return d.reshape(space.size, n)


def weak_derivative(field: Field, axis: int) -> Field:
    values = derivative_along(field.values, field.space, axis)
    return field.with_values(values, name=f"D{axis}_{field.name}")


# ═══════════════════════════════════════════════════════════════
# ⏱️ TIME INTEGRALS
# ═══════════════════════════════════════════════════════════════

def _check_same_space(field: Field, base: SpaceSlice) -> None:
    if field.space != base.space:
        raise GridError(f"base slice grid {base.space} does not match field grid {field.space}")


def cumulative_integral(f: Field, F0: SpaceSlice, t0_index: int) -> Field:
    """F(·,t_j) = F0 + ∫_{t_{t0}}^{t_j} f ds, left-Riemann, signed for j < t0_index."""
    _check_same_space(f, F0)
    if not 0 <= t0_index < f.time.n:
        raise GridError(f"base index {t0_index} outside 0..{f.time.n - 1}")
    prefix = np.zeros(f.values.shape)
    prefix[:, 1:] = np.cumsum(f.values[:, :-1], axis=1)
    F = F0.values[:, None] + f.time.dt * (prefix - prefix[:, t0_index:t0_index + 1])
    return f.with_values(F, name=f"int_{f.name}")


def integrate_time(f: Field, j1: int, j2: int) -> SpaceSlice:
    """∫_{t_j1}^{t_j2} f dt over the cells j1..j2-1."""
    if j1 > j2:
        raise GridError(f"integration bounds reversed: j1={j1} > j2={j2}")
    if j1 < 0 or j2 >= f.time.n:
        raise GridError(f"integration bounds {j1}..{j2} outside 0..{f.time.n - 1}")
    return SpaceSlice(f.space, f.time.dt * f.values[:, j1:j2].sum(axis=1))


def forward_difference(F: Field) -> Field:
    """(F(t_{j+1}) - F(t_j)) / dt on the first n-1 grid points."""
    if F.time.n < 2:
        raise GridError("forward difference needs at least 2 time points")
    diff = np.diff(F.values, axis=1) / F.time.dt
    return F.with_values(diff, time=TimeGrid(F.time.t0, F.time.dt, F.time.n - 1), name=f"dt_{F.name}")


def integration_by_parts_residual(
    f: Field,
    g: Field,
    F0: SpaceSlice,
    G1: SpaceSlice,
    t0_index: int,
    t1_index: int,
    a_index: int,
    b_index: int,
) -> SpaceSlice:
    """
    R = ∫_a^b (f·G + F·g) dt - [F(b)G(b) - F(a)G(a)] with F, G the cumulative
    integrals of f, g based at t0_index, t1_index. O(dt) for bounded f, g.
    """
    if f.space != g.space or f.time != g.time:
        raise GridError("integration by parts needs f and g on the same grids")
    if not 0 <= a_index <= b_index < f.time.n:
        raise GridError(f"need 0 <= a <= b < n, got a={a_index}, b={b_index}, n={f.time.n}")
    F = cumulative_integral(f, F0, t0_index).values
    G = cumulative_integral(g, G1, t1_index).values
    cells = slice(a_index, b_index)
    integral = f.time.dt * np.sum(f.values[:, cells] * G[:, cells] + F[:, cells] * g.values[:, cells], axis=1)
    boundary = F[:, b_index] * G[:, b_index] - F[:, a_index] * G[:, a_index]
    return SpaceSlice(f.space, integral - boundary)


def abel_defect(F: Field, G: Field, a_index: int, b_index: int) -> float:
    """
    Relative defect of summation by parts
        Σ (F_{j+1} - F_j) G_j = F_b G_b - F_a G_a - Σ F_{j+1} (G_{j+1} - G_j),  j = a..b-1,
    maximized over spatial points. Sums use math.fsum.
    """
    if F.space != G.space or F.time != G.time:
        raise GridError("summation by parts needs F and G on the same grids")
    if not 0 <= a_index <= b_index < F.time.n:
        raise GridError(f"need 0 <= a <= b < n, got a={a_index}, b={b_index}, n={F.time.n}")
    worst = 0.0
    for Fs, Gs in zip(F.values, G.values):
        dF = np.diff(Fs[a_index:b_index + 1])
        dG = np.diff(Gs[a_index:b_index + 1])
        left = dF * Gs[a_index:b_index]
        right = Fs[a_index + 1:b_index + 1] * dG
        ends = (Fs[b_index] * Gs[b_index], -Fs[a_index] * Gs[a_index])
        terms = list(left) + [-e for e in ends] + list(right)
        scale = math.fsum(abs(x) for x in terms)
        if scale == 0.0:
            continue
        worst = max(worst, abs(math.fsum(terms)) / scale)
    return worst
