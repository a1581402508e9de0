import numpy as np
import pytest

from core.errors import GridError, WindowError
from modules.corpus import entry_linear_t
from modules.field import Field, SpaceGrid, TimeGrid
from modules.operators import (
    SteklovParams, ih_domain, naive_average, pointwise_average, steklov_average,
    steklov_average_extended, steklov_time_derivative, window_means,
)
from modules.operators.steklov import prefix_sums


def _constant(c, n=9, points=3):
    space, time = SpaceGrid.uniform(points), TimeGrid.over(0.0, 1.0, n)
    return Field(space, time, np.full((space.size, time.n), c), "c")


def test_from_h_requires_integer_multiple():
    assert SteklovParams.from_h(0.25, 0.125).k == 2
    with pytest.raises(WindowError, match="multiple"):
        SteklovParams.from_h(0.3, 0.125)
    with pytest.raises(WindowError):
        SteklovParams.from_h(-0.25, 0.125)
    with pytest.raises(WindowError):
        SteklovParams(0.125, 0)


def test_params_must_match_grid():
    with pytest.raises(WindowError):
        steklov_average(_constant(1.0), SteklovParams(0.3, 2))


def test_domain_shrinks_by_k():
    time = TimeGrid.over(0.0, 1.0, 9)
    assert ih_domain(time, SteklovParams.from_steps(3, time.dt)).n == 6
    assert ih_domain(time, SteklovParams.from_steps(8, time.dt)).n == 1
    with pytest.raises(WindowError, match="empty domain"):
        ih_domain(time, SteklovParams.from_steps(9, time.dt))


def test_constant_is_reproduced_exactly():
    field = _constant(3.0)
    averaged = steklov_average(field, SteklovParams.from_h(0.25, field.time.dt))
    assert averaged.time.n == field.time.n - 2
    assert np.all(averaged.values == 3.0)


def test_extended_constant_drops_off_at_the_right_end():
    field = _constant(1.0)
    params = SteklovParams.from_steps(2, field.time.dt)
    averaged = steklov_average_extended(field, params)
    assert averaged.time == field.time
    np.testing.assert_array_equal(averaged.values[0, :-2], 1.0)
    assert averaged.values[0, -2] == pytest.approx(0.5)
    assert averaged.values[0, -1] == 0.0


def test_linear_in_time_matches_discrete_oracle():
    entry = entry_linear_t(SpaceGrid.uniform(3), TimeGrid.over(0.0, 1.0, 65))
    for h in (1 / 64, 0.125, 0.5):
        averaged = steklov_average(entry.field, SteklovParams.from_h(h, entry.field.time.dt))
        np.testing.assert_allclose(averaged.values, entry.oracle_average_discrete(h).values, rtol=0, atol=1e-12)


def test_pointwise_average_uses_left_riemann_weights():
    field = Field(SpaceGrid((1,), (1.0,), (0.0,)), TimeGrid(0.0, 1.0, 3), [2.0, 4.0, 5.0])
    params = SteklovParams.from_steps(2, 1.0)
    assert pointwise_average(field, 0, 0, params) == pytest.approx(3.0)
    assert pointwise_average(field, 0, 1, params) == pytest.approx(2.0)
    assert pointwise_average(field, 0, 2, params) == 0.0
    two = Field(SpaceGrid((1,), (1.0,), (0.0,)), TimeGrid(0.0, 1.0, 2), [2.0, 4.0])
    assert pointwise_average(two, 0, 0, params) == pytest.approx(1.0)


def test_pointwise_average_bounds():
    field = _constant(1.0)
    params = SteklovParams.from_steps(2, field.time.dt)
    with pytest.raises(GridError):
        pointwise_average(field, 3, 0, params)
    with pytest.raises(GridError):
        pointwise_average(field, 0, 9, params)


@pytest.mark.parametrize("k", [1, 2, 5, 32])
def test_pointwise_matches_extended_operator(random_field, k):
    params = SteklovParams.from_steps(k, random_field.time.dt)
    averaged = steklov_average_extended(random_field, params).values
    for s in range(random_field.space.size):
        for j in range(random_field.time.n):
            assert pointwise_average(random_field, s, j, params) == pytest.approx(averaged[s, j], abs=1e-12)


@pytest.mark.parametrize("k", [1, 2, 7, 32])
def test_prefix_sums_match_naive(random_field, k):
    params = SteklovParams.from_steps(k, random_field.time.dt)
    np.testing.assert_allclose(
        steklov_average(random_field, params).values,
        naive_average(random_field, params).values, rtol=0, atol=1e-12,
    )
    np.testing.assert_allclose(
        steklov_average_extended(random_field, params).values,
        naive_average(random_field, params, extended=True).values, rtol=0, atol=1e-12,
    )


def test_compensated_prefix_sums_agree():
    values = np.random.default_rng(3).standard_normal((2, 500))
    np.testing.assert_allclose(prefix_sums(values, compensated=True), prefix_sums(values), rtol=0, atol=1e-10)


def test_restricted_window_wider_than_grid():
    with pytest.raises(WindowError):
        window_means(np.ones((1, 4)), 4)


def test_time_derivative_identity(random_field):
    params = SteklovParams.from_steps(4, random_field.time.dt)
    averaged = steklov_average(random_field, params)
    derivative = steklov_time_derivative(random_field, params)
    assert derivative.time.n == averaged.time.n
    np.testing.assert_allclose(
        np.diff(averaged.values, axis=1) / random_field.time.dt,
        derivative.values[:, :-1], rtol=0, atol=1e-10,
    )


@pytest.mark.parametrize("k", [1, 3, 16])
@pytest.mark.parametrize("alpha, beta", [(2.0, -0.5), (-1.25, 3.0)])
def test_average_is_linear(random_field, k, alpha, beta):
    other = random_field.with_values(np.random.default_rng(19).standard_normal(random_field.values.shape))
    combined = random_field.with_values(alpha * random_field.values + beta * other.values)
    params = SteklovParams.from_steps(k, random_field.time.dt)
    for operator in (steklov_average, steklov_average_extended):
        expected = alpha * operator(random_field, params).values + beta * operator(other, params).values
        scale = max(1.0, float(np.abs(expected).max()))
        np.testing.assert_allclose(operator(combined, params).values, expected, rtol=0, atol=1e-12 * scale)
