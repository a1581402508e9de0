"""
Check families as registered modules

Each class plans parameter sets for a corpus entry (or for the whole suite
when per_entry is False) and executes one of them. The registry discovers
these classes; lemma_ids drive `verify --lemma` selection.
"""

from abc import abstractmethod
from typing import Any, Dict, List, Optional

from config import VERIFY_CONFIG
from core.base_module import BaseModule
from core.run_config import RunConfig
from modules.corpus import CorpusEntry
from . import lemma_checks as checks
from .results import Result

SPATIAL_CLASSES = ("smooth-periodic", "random-smooth")


class BaseCheck(BaseModule):
    """A family of checks sharing one function in lemma_checks"""

    per_entry = True
    applies_to_random = False
    study = False

    def applies(self, entry: CorpusEntry) -> bool:
        return True

    def plan(self, entry: Optional[CorpusEntry], run_config: RunConfig) -> List[Dict[str, Any]]:
        return []

    def execute(self, entry: Optional[CorpusEntry], suite: Dict[str, CorpusEntry], **params) -> List[Result]:
        outcome = self.check(entry, suite, **params)
        return outcome if isinstance(outcome, list) else [outcome]

    @abstractmethod
    def check(self, entry, suite, **params):
        """Call the underlying lemma check"""

    @staticmethod
    def _windows(entry: CorpusEntry, run_config: RunConfig, restricted: bool = False) -> List[float]:
        """Sweep windows that fit the entry's grid (k <= n-1 for the restricted operator)."""
        time = entry.field.time
        limit = time.n - 1 if restricted else float("inf")
        return [h for h in run_config.window_list(time) if round(h / time.dt) <= limit]


# ═══════════════════════════════════════════════════════════════
# 📏 NORM INEQUALITIES
# ═══════════════════════════════════════════════════════════════

class ContractionCheck(BaseCheck):
    lemma_ids = ("2.4c", "2.4d")
    description = "‖v_h‖ <= ‖v‖ in L^r(I, L^q)"
    applies_to_random = True

    def plan(self, entry, run_config):
        jobs = []
        for operator in ("extended", "restricted"):
            for h in self._windows(entry, run_config, restricted=operator == "restricted"):
                for q in run_config.q_values():
                    for r in run_config.r_values():
                        jobs.append({"q": q, "r": r, "h": h, "operator": operator})
        return jobs

    def check(self, entry, suite, q, r, h, operator):
        return checks.check_contraction(entry, q, r, h, operator)


class PointwiseBoundCheck(BaseCheck):
    lemma_ids = ("2.4a",)
    description = "max_t ‖v_h(t)‖_q <= h^(-1/r) ‖v‖"
    applies_to_random = True

    def plan(self, entry, run_config):
        return [{"q": q, "r": r, "h": h}
                for h in self._windows(entry, run_config)
                for q in run_config.q_values()
                for r in run_config.r_values()]

    def check(self, entry, suite, q, r, h):
        return checks.check_pointwise_bound(entry, q, r, h)


class LipschitzCheck(BaseCheck):
    lemma_ids = ("2.2", "2.4b")
    description = "difference quotients of v_h <= 2M/h"

    def plan(self, entry, run_config):
        jobs = []
        for operator in ("restricted", "extended"):
            for h in self._windows(entry, run_config, restricted=operator == "restricted"):
                jobs.extend({"q": q, "h": h, "operator": operator} for q in run_config.q_values())
        return jobs

    def check(self, entry, suite, q, h, operator):
        return checks.check_lipschitz(entry, q, h, operator)


# ═══════════════════════════════════════════════════════════════
# 📉 CONVERGENCE STUDIES
# ═══════════════════════════════════════════════════════════════

class UniformConvergenceCheck(BaseCheck):
    lemma_ids = ("2.2",)
    description = "sup over [a, T] of ‖v_h - v‖_q -> 0"
    study = True

    def plan(self, entry, run_config):
        return [{"q": q} for q in run_config.q_values()]

    def check(self, entry, suite, q):
        return checks.check_uniform_convergence(entry, q)


class LrConvergenceCheck(BaseCheck):
    lemma_ids = ("2.5",)
    description = "‖v_h - v‖_{L^r(L^q)} -> 0, r < inf"
    study = True

    def plan(self, entry, run_config):
        qs = run_config.q_values() if run_config.q is not None else [1.0]
        if run_config.r is not None:
            rs = run_config.r_values()
        else:
            rs = [1.0, 2.0] if entry.smoothness_class == "step" else [1.0]
        return [{"q": q, "r": r} for q in qs for r in rs if r != float("inf")]

    def check(self, entry, suite, q, r):
        return checks.check_lr_convergence(entry, q, r)


class AeConvergenceCheck(BaseCheck):
    lemma_ids = ("2.6",)
    description = "pointwise convergence off the declared jump windows"
    study = True

    def applies(self, entry):
        return entry.smoothness_class != "cantor"

    def plan(self, entry, run_config):
        qs = run_config.q_values() if run_config.q is not None else [1.0]
        return [{"q": q} for q in qs]

    def check(self, entry, suite, q):
        studies = checks.check_ae_convergence(entry, q)
        summary = checks.summarize_ae_convergence(entry, studies)
        return [summary] + [s for s in studies if s.details["exceptional"]]


class WeakFormCheck(BaseCheck):
    lemma_ids = ("weak-form",)
    description = "⟨D_i v|φ⟩ + ⟨v|∂_i φ⟩ -> 0 at order 2 in dx"
    study = True

    def applies(self, entry):
        return entry.smoothness_class in SPATIAL_CLASSES

    def plan(self, entry, run_config):
        return [{"axis": axis} for axis in range(entry.field.space.ndim)]

    def check(self, entry, suite, axis):
        return checks.check_weak_form(entry, axis)


class IntegrationByPartsCheck(BaseCheck):
    lemma_ids = ("5.3", "5.4")
    description = "integration by parts residual O(dt), summation by parts exact"
    per_entry = False
    study = True
    pairs = (("constant", "constant"), ("smooth-periodic", "random-smooth"))   # by smoothness class

    def plan(self, entry, run_config):
        return [{"f_class": f, "g_class": g} for f, g in self.pairs]

    @staticmethod
    def _pick(suite: Dict[str, CorpusEntry], smoothness_class: str) -> CorpusEntry:
        for entry in suite.values():
            if entry.smoothness_class == smoothness_class and entry.field.space.ndim == 1:
                return entry
        raise KeyError(f"suite has no 1-D {smoothness_class} entry")

    def check(self, entry, suite, f_class, g_class):
        return checks.check_ibp(self._pick(suite, f_class), self._pick(suite, g_class))


# ═══════════════════════════════════════════════════════════════
# 🧮 EXACT IDENTITIES
# ═══════════════════════════════════════════════════════════════

class PointwiseValuesCheck(BaseCheck):
    lemma_ids = ("3.1",)
    description = "scalar pointwise average equals the field-level operator"

    def plan(self, entry, run_config):
        return [{"h": h} for h in self._windows(entry, run_config)]

    def check(self, entry, suite, h):
        return checks.check_pointwise_values(entry, h)


class CommutationCheck(BaseCheck):
    lemma_ids = ("4.1",)
    description = "D_i(v_h) = (D_i v)_h"

    def applies(self, entry):
        return all(s >= 3 for s in entry.field.space.shape)

    def plan(self, entry, run_config):
        return [{"h": h, "axis": axis}
                for h in self._windows(entry, run_config, restricted=True)
                for axis in range(entry.field.space.ndim)]

    def check(self, entry, suite, h, axis):
        return checks.check_commutation(entry, h, axis)


class TimeDerivativeCheck(BaseCheck):
    lemma_ids = ("4.2", "4.3")
    description = "forward difference of v_h = (v(t+h) - v(t))/h"

    def plan(self, entry, run_config):
        return [{"h": h} for h in self._windows(entry, run_config, restricted=True)]

    def check(self, entry, suite, h):
        return checks.check_time_derivative(entry, h)


class FtcCheck(BaseCheck):
    lemma_ids = ("5.1", "5.2")
    description = "discrete fundamental theorem of calculus"

    def plan(self, entry, run_config):
        return [{}]

    def check(self, entry, suite):
        return checks.check_ftc(entry)


class KernelOracleCheck(BaseCheck):
    lemma_ids = ("kernel",)
    description = "prefix-sum kernel = direct window sums"
    applies_to_random = True

    def plan(self, entry, run_config):
        time = entry.field.time
        if run_config.h is not None:
            return [{"h": h} for h in run_config.window_list(time)]
        steps = [time.n - 1 if k < 0 else k for k in VERIFY_CONFIG["kernel_window_steps"]]
        return [{"h": k * time.dt} for k in steps if 1 <= k <= time.n - 1]

    def check(self, entry, suite, h):
        return checks.check_kernel_oracle(entry, h)


class CorpusOracleCheck(BaseCheck):
    lemma_ids = ("corpus",)
    description = "v_h against the closed-form average"

    def applies(self, entry):
        return entry.oracle_average is not None and entry.oracle_dt_constant is not None

    def plan(self, entry, run_config):
        return [{"h": h} for h in self._windows(entry, run_config, restricted=True)]

    def check(self, entry, suite, h):
        return checks.check_corpus_oracle(entry, h)


class CantorCheck(BaseCheck):
    lemma_ids = ("5.2-remark",)
    description = "FTC fails for the Cantor staircase, holds once f is its discrete derivative"
    per_entry = False

    def plan(self, entry, run_config):
        return [{"level": level, "absolutely_continuous": restored}
                for level in VERIFY_CONFIG["cantor_levels"]
                for restored in (False, True)]

    def check(self, entry, suite, level, absolutely_continuous):
        cantor = next((e for e in suite.values() if e.smoothness_class == "cantor"), None)
        grids = (cantor.field.space, cantor.field.time) if cantor else (None, None)
        return checks.demo_cantor(level, absolutely_continuous, *grids)
