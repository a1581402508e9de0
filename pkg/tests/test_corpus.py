import numpy as np
import pytest

from core.errors import CorpusError
from modules.corpus import (
    SMOOTHNESS_CLASSES, CorpusEntry, cantor_staircase, entry_cantor, entry_linear_t,
    entry_random_smooth, entry_sin_gauss, entry_step, random_seeds, random_suite, standard_suite, suite_by_name,
)
from modules.field import SpaceGrid, TimeGrid
from modules.operators import SteklovParams, steklov_average


@pytest.fixture
def grids():
    return SpaceGrid.uniform(9), TimeGrid.over(0.0, 1.0, 65)


@pytest.mark.parametrize("level", [1, 4, 12])
def test_cantor_staircase_endpoints_and_monotonicity(level):
    x = np.linspace(0.0, 1.0, 2001)
    G = cantor_staircase(x, level)
    assert G[0] == 0.0 and G[-1] == pytest.approx(1.0)
    assert cantor_staircase(np.array([0.5]), level)[0] == pytest.approx(0.5)
    assert np.all(np.diff(G) >= 0.0)


def test_cantor_level_range():
    with pytest.raises(CorpusError):
        entry_cantor(0)
    with pytest.raises(CorpusError):
        entry_cantor(13)


def test_step_time_must_be_an_interior_grid_time(grids):
    space, time = grids
    with pytest.raises(CorpusError):
        entry_step(0.3, space, time)
    with pytest.raises(CorpusError):
        entry_step(0.0, space, time)
    entry = entry_step(0.5, space, time)
    assert entry.declared_jumps == (0.5,)
    assert entry.field.values[0, 31] == 0.0 and entry.field.values[0, 32] == 1.0


def test_standard_suite_covers_every_class():
    suite = standard_suite(42)
    assert [e.name for e in suite] == [
        "constant", "linear_t", "sin_gauss", "step", "cantor", "random_smooth_seed42", "sin_gauss_2d",
    ]
    assert {e.smoothness_class for e in suite} == set(SMOOTHNESS_CLASSES)
    assert suite[-1].field.space.shape == (33, 33)


def test_suite_by_name_keeps_order():
    suite = standard_suite(42)
    by_name = suite_by_name(suite)
    assert list(by_name) == [e.name for e in suite]
    assert by_name["step"] is suite[3]


def test_random_suite_is_seeded():
    first, second = random_suite(3, 5), random_suite(3, 5)
    assert [e.name for e in first] == [e.name for e in second]
    for a, b in zip(first, second):
        np.testing.assert_array_equal(a.field.values, b.field.values)
    assert len(set(random_seeds(10, 5))) == 10


def test_unknown_smoothness_class(grids):
    entry = entry_linear_t(*grids)
    with pytest.raises(CorpusError):
        CorpusEntry("x", entry.field, "fractal", entry.rebuild)


def test_resample_keeps_the_entry(grids):
    space, time = grids
    entry = entry_random_smooth(9, space=space, time=time)
    fine = entry.resample(space.refine(2), time.refine(2))
    assert fine.name == entry.name
    assert fine.field.space.shape == (17,)
    np.testing.assert_allclose(fine.field.values[::2, ::2], entry.field.values, atol=1e-14)


@pytest.mark.parametrize("builder", [entry_linear_t, entry_sin_gauss, entry_random_smooth])
@pytest.mark.parametrize("k", [1, 4, 32])
def test_discrete_oracle_matches_kernel(grids, builder, k):
    space, time = grids
    entry = builder(space=space, time=time)
    h = k * time.dt
    averaged = steklov_average(entry.field, SteklovParams.from_h(h, time.dt))
    np.testing.assert_allclose(averaged.values, entry.oracle_average_discrete(h).values, rtol=0, atol=1e-12)


@pytest.mark.parametrize("builder", [entry_linear_t, entry_sin_gauss, entry_step])
def test_continuous_oracle_within_dt(grids, builder):
    space, time = grids
    entry = builder(space=space, time=time)
    h = 8 * time.dt
    averaged = steklov_average(entry.field, SteklovParams.from_h(h, time.dt))
    gap = np.abs(averaged.values - entry.oracle_average(h).values).max()
    assert gap <= entry.oracle_dt_constant * time.dt + 1e-12
