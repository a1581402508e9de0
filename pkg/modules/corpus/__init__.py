"""
Corpus: analytic test fields with closed-form oracles
"""

from .entries import (
    CorpusEntry, SMOOTHNESS_CLASSES, default_space_grid, default_time_grid,
    entry_constant, entry_linear_t, entry_sin_gauss, entry_sin_gauss_2d,
    entry_step, entry_cantor, entry_random_smooth,
)
from .staircase import cantor_staircase
from .suite import standard_suite, random_suite, random_seeds, suite_by_name

__all__ = [
    'CorpusEntry', 'SMOOTHNESS_CLASSES', 'default_space_grid', 'default_time_grid',
    'entry_constant', 'entry_linear_t', 'entry_sin_gauss', 'entry_sin_gauss_2d',
    'entry_step', 'entry_cantor', 'entry_random_smooth', 'cantor_staircase',
    'standard_suite', 'random_suite', 'random_seeds', 'suite_by_name',
]
