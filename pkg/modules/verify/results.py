"""
Result records produced by the checks

CheckResult       one inequality / identity / threshold verdict
ConvergenceStudy  errors against a shrinking h, dt or dx, with a fitted order
Both flatten to the same record shape for the report writer.
"""

import functools
import math
import time
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Union

from core.errors import ConvergenceError


def _clean(value: Any) -> Any:
    """JSON-safe numbers: inf -> "inf", nan -> None, numpy scalars -> python."""
    if isinstance(value, dict):
        return {str(k): _clean(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_clean(v) for v in value]
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if hasattr(value, "item"):
        value = value.item()
    if isinstance(value, float):
        if math.isnan(value):
            return None
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
    return value


@dataclass
class CheckResult:
    check_id: str
    field_name: str
    parameters: Dict[str, Any]
    measured: float
    bound_or_target: float
    margin: float
    passed: bool
    tolerance: float
    runtime_ms: float = 0.0
    kind: str = "inequality"
    details: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def inequality(cls, check_id, field_name, parameters, measured, bound, tolerance, details=None):
        """measured <= bound, up to tolerance"""
        margin = bound - measured
        return cls(check_id, field_name, parameters, float(measured), float(bound), float(margin),
                   bool(margin >= -tolerance), float(tolerance), kind="inequality", details=details or {})

    @classmethod
    def identity(cls, check_id, field_name, parameters, measured, target, tolerance, details=None):
        """|measured - target| <= tolerance"""
        gap = abs(measured - target)
        return cls(check_id, field_name, parameters, float(measured), float(target), float(tolerance - gap),
                   bool(gap <= tolerance), float(tolerance), kind="identity", details=details or {})

    @classmethod
    def at_least(cls, check_id, field_name, parameters, measured, threshold, details=None):
        """measured must exceed threshold"""
        margin = measured - threshold
        return cls(check_id, field_name, parameters, float(measured), float(threshold), float(margin),
                   bool(margin > 0), 0.0, kind="at_least", details=details or {})

    def to_record(self) -> Dict[str, Any]:
        return _clean({
            "check_id": self.check_id,
            "field_name": self.field_name,
            "kind": self.kind,
            "parameters": self.parameters,
            "measured": self.measured,
            "bound_or_target": self.bound_or_target,
            "margin": self.margin,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "runtime_ms": self.runtime_ms,
            "details": self.details,
        })


@dataclass
class ConvergenceStudy:
    check_id: str
    field_name: str
    parameters: Dict[str, Any]
    variable: str                 # "h", "dt" or "dx"
    values: List[float]
    errors: List[float]
    abscissa: List[float]         # what the order is fitted against
    fitted_order: Optional[float]
    order_target: Optional[float]
    order_window: float
    passed: bool
    runtime_ms: float = 0.0
    details: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if len(self.values) < 3:
            raise ConvergenceError(f"{self.check_id}: need >= 3 {self.variable} values, got {len(self.values)}")
        if len(self.errors) != len(self.values) or len(self.abscissa) != len(self.values):
            raise ConvergenceError(f"{self.check_id}: {len(self.values)} {self.variable} values but "
                                   f"{len(self.errors)} errors")
        if any(b >= a for a, b in zip(self.values, self.values[1:])):
            raise ConvergenceError(f"{self.check_id}: {self.variable} values must strictly decrease: {self.values}")
        if any(e < 0 for e in self.errors):
            raise ConvergenceError(f"{self.check_id}: errors must be nonnegative")

    @property
    def margin(self) -> Optional[float]:
        if self.fitted_order is None or self.order_target is None:
            return None
        return self.order_window - abs(self.fitted_order - self.order_target)

    def to_record(self) -> Dict[str, Any]:
        return _clean({
            "check_id": self.check_id,
            "field_name": self.field_name,
            "kind": "convergence",
            "parameters": self.parameters,
            "measured": self.fitted_order,
            "bound_or_target": self.order_target,
            "margin": self.margin,
            "tolerance": self.order_window,
            "passed": self.passed,
            "runtime_ms": self.runtime_ms,
            f"{self.variable}_values": self.values,
            "abscissa": self.abscissa,
            "errors": self.errors,
            "details": self.details,
        })


Result = Union[CheckResult, ConvergenceStudy]


def timed(fn):
    """Stamp runtime_ms on whatever result(s) the check returns."""
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        outcome = fn(*args, **kwargs)
        elapsed = (time.perf_counter() - start) * 1000.0
        for item in outcome if isinstance(outcome, list) else [outcome]:
            item.runtime_ms = elapsed
        return outcome
    return wrapper
