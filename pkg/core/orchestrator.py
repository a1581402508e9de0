"""
Verification Orchestrator - plans check jobs and runs them on a worker pool
Results come back in plan order whatever the worker count
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

import config
from .errors import ConfigError
from .module_registry import ModuleRegistry, registry
from .run_config import RunConfig

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckJob:
    """Immutable job description handed to a worker"""

    module: str
    entry: Optional[str]
    params: Tuple[Tuple[str, Any], ...]

    def kwargs(self) -> Dict[str, Any]:
        return dict(self.params)


def build_suite(run_config: RunConfig, include_random: bool) -> Tuple[List, List]:
    """Standard suite and seeded random fields (empty unless asked), on the configured grids."""
    from modules.corpus import random_suite, standard_suite

    standard = standard_suite(run_config.seed)
    randoms = random_suite(run_config.random_fields, run_config.seed) if include_random else []
    if run_config.grid_overridden():
        time, space = run_config.time_grid(), run_config.space_grid()
        standard, randoms = (
            [e.resample(space if e.field.space.ndim == 1 else e.field.space, time) for e in group]
            for group in (standard, randoms)
        )
    return standard, randoms


class VerificationRunner:
    """
    Selects check modules, plans (module, entry, params) jobs and executes them
    """

    def __init__(self, run_config: RunConfig, module_registry: ModuleRegistry = registry):
        self.run_config = run_config
        self.registry = module_registry
        self.modules = {}
        self.entries = []
        self.random_names = set()

    def initialize(self, studies_only: bool = False) -> bool:
        """Discover check modules, pick the requested ones and build the corpus"""
        for package in config.CHECK_PACKAGES:
            self.registry.auto_discover(package)

        for name in self.registry.select(self.run_config.lemma_ids):
            module = self.registry.get_module(name)
            if module is None:
                raise RuntimeError(f"Failed to load check module {name}")
            if studies_only and not getattr(module, "study", False):
                continue
            self.modules[name] = module
        if not self.modules:
            raise ConfigError(f"no checks match lemma ids {self.run_config.lemma_ids}")

        include_random = any(getattr(m, "applies_to_random", False) for m in self.modules.values())
        standard, randoms = build_suite(self.run_config, include_random)
        self.entries = standard + randoms
        self.random_names = {e.name for e in randoms}
        logger.info("✅ %d check modules, %d corpus entries", len(self.modules), len(self.entries))
        return True

    def plan(self) -> List[CheckJob]:
        jobs = []
        for name, module in self.modules.items():
            if not module.per_entry:
                jobs.extend(CheckJob(name, None, tuple(p.items())) for p in module.plan(None, self.run_config))
                continue
            for entry in self.entries:
                if entry.name in self.random_names and not module.applies_to_random:
                    continue
                if not module.applies(entry):
                    continue
                jobs.extend(CheckJob(name, entry.name, tuple(p.items()))
                            for p in module.plan(entry, self.run_config))
        logger.info("📋 Planned %d jobs", len(jobs))
        return jobs

    def _execute(self, job: CheckJob, suite: Dict) -> List:
        module = self.modules[job.module]
        entry = suite[job.entry] if job.entry is not None else None
        return module.execute(entry, suite, **job.kwargs())

    def run(self, jobs: Optional[List[CheckJob]] = None) -> List:
        from modules.corpus import suite_by_name

        jobs = self.plan() if jobs is None else jobs
        suite = suite_by_name(self.entries)
        results = []
        if self.run_config.jobs == 1:
            for job in jobs:
                results.extend(self._execute(job, suite))
        else:
            with ThreadPoolExecutor(max_workers=self.run_config.jobs) as pool:
                futures = [pool.submit(self._execute, job, suite) for job in jobs]
                for future in futures:
                    results.extend(future.result())
        failed = sum(1 for r in results if not r.passed)
        if failed:
            logger.warning("⚠️  %d of %d results failed", failed, len(results))
        else:
            logger.info("✅ All %d results passed", len(results))
        return results