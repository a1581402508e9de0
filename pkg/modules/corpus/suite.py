"""
Standard and random corpus suites
"""

import logging
from typing import Dict, List, Optional

import numpy as np

from config import CORPUS_CONFIG
from .entries import (
    CorpusEntry, entry_cantor, entry_constant, entry_linear_t, entry_random_smooth,
    entry_sin_gauss, entry_sin_gauss_2d, entry_step,
)

logger = logging.getLogger(__name__)


def standard_suite(seed: Optional[int] = None) -> List[CorpusEntry]:
    """One entry per smoothness class on the default grids, plus the 2-D smoke test."""
    seed = CORPUS_CONFIG["seed"] if seed is None else seed
    suite = [
        entry_constant(),
        entry_linear_t(),
        entry_sin_gauss(),
        entry_step(),
        entry_cantor(),
        entry_random_smooth(seed),
        entry_sin_gauss_2d(),
    ]
    logger.debug("📚 Standard suite: %s", ", ".join(e.name for e in suite))
    return suite


def random_seeds(count: int, seed: int) -> List[int]:
    return [int(s) for s in np.random.SeedSequence(seed).generate_state(count)]


def random_suite(count: int, seed: Optional[int] = None) -> List[CorpusEntry]:
    """count seeded random-smooth fields; the seeds derive from `seed`."""
    seed = CORPUS_CONFIG["seed"] if seed is None else seed
    return [entry_random_smooth(s) for s in random_seeds(count, seed)]


def suite_by_name(entries: List[CorpusEntry]) -> Dict[str, CorpusEntry]:
    """Entries keyed by name; checks that pair fields look them up here."""
    return {entry.name: entry for entry in entries}
