"""
Shared fixtures: small grids keep the suite fast
"""

import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from modules.field import Field, SpaceGrid, TimeGrid  # noqa: E402


@pytest.fixture
def small_space():
    return SpaceGrid.uniform(9)


@pytest.fixture
def small_time():
    return TimeGrid.over(0.0, 1.0, 129)


@pytest.fixture
def random_field():
    rng = np.random.default_rng(7)
    space, time = SpaceGrid.uniform(5), TimeGrid.over(0.0, 1.0, 33)
    return Field(space, time, rng.standard_normal((space.size, time.n)), "noise")
