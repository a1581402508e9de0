"""
Property checks for the Steklov average, one function per statement

Inequalities and exact discrete identities return a CheckResult; statements
about limits h -> 0 return a ConvergenceStudy with every raw (h, error) pair.
Tolerances come from TOLERANCE_CONFIG; identity scales are named per check.
"""

import logging
import math
from typing import Dict, List, Optional, Sequence

import numpy as np

from config import TOLERANCE_CONFIG, VERIFY_CONFIG
from core.errors import ConvergenceError, CorpusError, ExponentError, GridError, WindowError
from modules.corpus import CorpusEntry, entry_cantor
from modules.field import Field, SpaceGrid, SpaceSlice, TimeGrid
from modules.operators import (
    BochnerSpec, SteklovParams, abel_defect, bochner_from_profile, bochner_norm,
    bump_gradient, bump_test_function, cumulative_integral, derivative_along, ess_sup_time,
    forward_difference, ih_domain, integrate_time, integration_by_parts_residual, lq_profile,
    naive_average, parse_exponent, pointwise_average, steklov_average, steklov_average_extended,
    steklov_time_derivative, window_means,
)
from .convergence import decreases, estimate_order
from .results import CheckResult, ConvergenceStudy, timed

logger = logging.getLogger(__name__)

SMOOTH_CLASSES = ("polynomial", "smooth-periodic", "random-smooth")
OPERATORS = ("restricted", "extended")
MIN_WINDOWS = 3


# ═══════════════════════════════════════════════════════════════
# 🔧 SHARED HELPERS
# ═══════════════════════════════════════════════════════════════

def _parameters(field: Field, params: Optional[SteklovParams] = None, **extra) -> Dict:
    out = {"dt": field.time.dt}
    if params is not None:
        out.update(h=params.h, k=params.k)
    out.update(extra)
    return out


def _averaged(field: Field, params: SteklovParams, operator: str) -> Field:
    if operator == "extended":
        return steklov_average_extended(field, params)
    if operator == "restricted":
        return steklov_average(field, params)
    raise WindowError(f"unknown operator {operator!r}, expected one of {OPERATORS}")


def default_h_list(time: TimeGrid) -> List[float]:
    """
    convergence_steps * dt without windows wider than half of I. When fewer
    than three survive (coarse override grids) the ladder is rebuilt by halving
    k from (n-1)//2 down to 1.
    """
    widest = (time.n - 1) // 2
    steps = [k for k in VERIFY_CONFIG["convergence_steps"] if k <= widest]
    if len(steps) < MIN_WINDOWS:
        steps, k = [], widest
        while k >= 1:
            steps.append(k)
            k //= 2
    return [k * time.dt for k in steps]


def _windows(time: TimeGrid, h_list: Optional[Sequence[float]]) -> List[SteklovParams]:
    h_list = list(h_list) if h_list is not None else default_h_list(time)
    if len(h_list) < MIN_WINDOWS:
        raise ConvergenceError(f"need >= {MIN_WINDOWS} window sizes, got {len(h_list)}")
    windows = [SteklovParams.from_h(h, time.dt) for h in h_list]
    if any(b.k >= a.k for a, b in zip(windows, windows[1:])):
        raise ConvergenceError(f"window sizes must strictly decrease: {h_list}")
    return windows


def _study(check_id: str, entry_name: str, parameters: Dict, variable: str, values: List[float],
           abscissa: List[float], errors: List[float], target: Optional[float], window: float,
           scale: float, details: Optional[Dict] = None) -> ConvergenceStudy:
    try:
        fitted = estimate_order(abscissa, errors, scale)
    except ConvergenceError:
        fitted = None
    if target is not None and fitted is not None:
        passed = abs(fitted - target) <= window
    else:
        passed = decreases(errors, scale)
    return ConvergenceStudy(
        check_id=check_id, field_name=entry_name, parameters=parameters, variable=variable,
        values=[float(v) for v in values], errors=[float(e) for e in errors],
        abscissa=[float(a) for a in abscissa], fitted_order=fitted, order_target=target,
        order_window=window, passed=bool(passed), details=details or {},
    )


# ═══════════════════════════════════════════════════════════════
# 📏 NORM INEQUALITIES
# ═══════════════════════════════════════════════════════════════

@timed
def check_contraction(entry: CorpusEntry, q, r, h: float, operator: str = "extended") -> CheckResult:
    """
    ‖v_h‖_{L^r(L^q)} <= ‖v‖_{L^r(L^q)}. The restricted v_h is measured on I_h
    against the norm over all of I; details carry ‖v‖ over I_h as well, which a
    constant field meets with equality.
    """
    spec = BochnerSpec(q, r)
    field = entry.field
    params = SteklovParams.from_h(h, field.time.dt)
    averaged = _averaged(field, params, operator)
    measured = bochner_norm(averaged, spec)
    bound = bochner_norm(field, spec)
    details = {}
    if operator == "restricted":
        truncated = field.with_values(field.values[:, : averaged.time.n], time=averaged.time)
        details["bound_on_ih"] = bochner_norm(truncated, spec)
    check_id = "lemma-2.4d-contraction" if operator == "extended" else "lemma-2.4c-contraction"
    return CheckResult.inequality(
        check_id, entry.name, _parameters(field, params, q=spec.q, r=spec.r, operator=operator),
        measured, bound, TOLERANCE_CONFIG["inequality_rtol"] * bound, details=details,
    )


@timed
def check_pointwise_bound(entry: CorpusEntry, q, r, h: float) -> CheckResult:
    """max_t ‖v_h(t)‖_q <= h^{-1/r} ‖v‖_{L^r(L^q)}, or <= ess sup for r = inf."""
    spec = BochnerSpec(q, r)
    field = entry.field
    params = SteklovParams.from_h(h, field.time.dt)
    averaged = steklov_average_extended(field, params)
    measured = float(lq_profile(averaged.values, field.space, spec.q).max())
    if math.isinf(spec.r):
        bound = ess_sup_time(field, spec.q)
    else:
        bound = params.h ** (-1.0 / spec.r) * bochner_norm(field, spec)
    return CheckResult.inequality(
        "lemma-2.4a-pointwise-bound", entry.name, _parameters(field, params, q=spec.q, r=spec.r),
        measured, bound, TOLERANCE_CONFIG["inequality_rtol"] * bound,
    )


@timed
def check_lipschitz(entry: CorpusEntry, q, h: float, operator: str = "restricted") -> CheckResult:
    """
    Largest difference quotient ‖v_h(t_i) - v_h(t_j)‖_q / |t_i - t_j| against 2M/h.
    The maximum over all pairs is attained on adjacent grid points.
    """
    q = parse_exponent(q)
    field = entry.field
    params = SteklovParams.from_h(h, field.time.dt)
    averaged = _averaged(field, params, operator)
    if averaged.time.n < 2:
        measured = 0.0
    else:
        steps = np.diff(averaged.values, axis=1)
        measured = float(lq_profile(steps, field.space, q).max()) / field.time.dt
    M = ess_sup_time(field, q)
    bound = 2.0 * M / params.h
    check_id = "lemma-2.2-lipschitz" if operator == "restricted" else "lemma-2.4b-lipschitz"
    return CheckResult.inequality(
        check_id, entry.name, _parameters(field, params, q=q, operator=operator),
        measured, bound, TOLERANCE_CONFIG["inequality_rtol"] * bound, details={"M": M},
    )


# ═══════════════════════════════════════════════════════════════
# 📉 CONVERGENCE AS h -> 0
# ═══════════════════════════════════════════════════════════════

@timed
def check_uniform_convergence(entry: CorpusEntry, q, h_list: Optional[Sequence[float]] = None) -> ConvergenceStudy:
    """max over [a, T] of ‖v_h(t) - v(t)‖_q, T = b - max(h), restricted operator."""
    q = parse_exponent(q)
    field = entry.field
    windows = _windows(field.time, h_list)
    last = field.time.n - 1 - windows[0].k
    errors = []
    for params in windows:
        gap = window_means(field.values, params.k)[:, : last + 1] - field.values[:, : last + 1]
        errors.append(float(lq_profile(gap, field.space, q).max()))
    target = 1.0 if entry.smoothness_class in SMOOTH_CLASSES else None
    return _study(
        "lemma-2.2-uniform-convergence", entry.name,
        _parameters(field, q=q, T=field.time.t(last)), "h",
        [p.h for p in windows], [p.h - field.time.dt for p in windows], errors,
        target, TOLERANCE_CONFIG["uniform_order_window"], ess_sup_time(field, q),
    )


def lr_order_target(entry: CorpusEntry, r: float) -> Optional[float]:
    """
    Expected order of ‖v_h - v‖_{L^r(L^q)} in h. Jumps (the declared step, or
    the zero extension at the right end of I) decay at 1/r.
    """
    if entry.smoothness_class == "cantor":
        return None
    if entry.smoothness_class == "step":
        return 1.0 / r
    if r == 1.0:
        return 1.0
    values = entry.field.values
    terminal = float(np.abs(values[:, -2]).max()) if values.shape[1] > 1 else 0.0
    if terminal > TOLERANCE_CONFIG["terminal_slice_ratio"] * entry.field.max_abs:
        return None
    return 1.0


@timed
def check_lr_convergence(entry: CorpusEntry, q, r, h_list: Optional[Sequence[float]] = None) -> ConvergenceStudy:
    """‖v_h - v‖_{L^r(I, L^q)} with the zero-extended average, r < inf."""
    spec = BochnerSpec(q, r)
    if math.isinf(spec.r):
        raise ExponentError("L^r convergence needs 1 <= r < inf")
    field = entry.field
    windows = _windows(field.time, h_list)
    errors = []
    for params in windows:
        gap = window_means(field.values, params.k, extended=True) - field.values
        errors.append(bochner_from_profile(lq_profile(gap, field.space, spec.q), field.time.dt, spec.r))
    window = (TOLERANCE_CONFIG["step_order_window"] if entry.smoothness_class == "step"
              else TOLERANCE_CONFIG["lr_order_window"])
    return _study(
        "lemma-2.5-lr-convergence", entry.name, _parameters(field, q=spec.q, r=spec.r), "h",
        [p.h for p in windows], [p.h - field.time.dt for p in windows], errors,
        lr_order_target(entry, spec.r), window, bochner_norm(field, spec),
    )


def exceptional_window(entry: CorpusEntry, h_max: float) -> List[int]:
    """Grid indices allowed to stay non-convergent: t in [jump - h_max, jump) for every declared jump."""
    times = entry.field.time.times()
    dt = entry.field.time.dt
    allowed = set()
    for jump in entry.declared_jumps:
        inside = (times >= jump - h_max - 1e-9 * dt) & (times < jump - 1e-9 * dt)
        allowed.update(int(j) for j in np.flatnonzero(inside))
    return sorted(allowed)


@timed
def check_ae_convergence(entry: CorpusEntry, q, h_list: Optional[Sequence[float]] = None) -> List[ConvergenceStudy]:
    """
    Per grid point of [a, T]: does ‖v_h(t) - v(t)‖_q go to 0 as h shrinks?
    A point is exceptional when its finest-h error keeps more than ae_drop_ratio
    of its worst error. Exceptional points must lie in exceptional_window.
    """
    q = parse_exponent(q)
    field = entry.field
    windows = _windows(field.time, h_list)
    last = field.time.n - 1 - windows[0].k
    table = np.array([
        lq_profile(window_means(field.values, p.k, extended=True)[:, : last + 1] - field.values[:, : last + 1],
                   field.space, q)
        for p in windows
    ])
    scale = ess_sup_time(field, q)
    floor = TOLERANCE_CONFIG["order_floor"] * scale
    allowed = set(exceptional_window(entry, windows[0].h))
    h_values = [p.h for p in windows]
    abscissa = [p.h - field.time.dt for p in windows]

    studies = []
    for j in range(last + 1):
        errors = table[:, j]
        t = field.time.t(j)
        stuck = bool(errors[-1] > floor and errors[-1] > TOLERANCE_CONFIG["ae_drop_ratio"] * errors.max())
        expected = j in allowed
        try:
            fitted = estimate_order(abscissa, errors, scale)
        except ConvergenceError:
            fitted = None
        studies.append(ConvergenceStudy(
            check_id="lemma-2.6-ae-convergence", field_name=entry.name,
            parameters=_parameters(field, q=q, t=t), variable="h", values=h_values,
            errors=[float(e) for e in errors], abscissa=abscissa, fitted_order=fitted,
            order_target=None, order_window=TOLERANCE_CONFIG["ae_drop_ratio"],
            passed=(not stuck) or expected,
            details={"exceptional": stuck, "in_declared_window": expected},
        ))
    return studies


def summarize_ae_convergence(entry: CorpusEntry, studies: List[ConvergenceStudy]) -> CheckResult:
    """One verdict: count of exceptional points outside the declared windows (must be 0)."""
    exceptional = [s.parameters["t"] for s in studies if s.details["exceptional"]]
    unexpected = [s.parameters["t"] for s in studies if not s.passed]
    h_max = studies[0].values[0] if studies else 0.0
    result = CheckResult.inequality(
        "lemma-2.6-ae-summary", entry.name,
        {"dt": entry.field.time.dt, "q": studies[0].parameters["q"] if studies else None, "h": h_max},
        float(len(unexpected)), 0.0, 0.0,
        details={
            "exceptional_times": exceptional,
            "unexpected_times": unexpected,
            "declared_jumps": list(entry.declared_jumps),
            "points_checked": len(studies),
        },
    )
    result.runtime_ms = studies[0].runtime_ms if studies else 0.0
    return result


# ═══════════════════════════════════════════════════════════════
# 🧮 EXACT DISCRETE IDENTITIES
# ═══════════════════════════════════════════════════════════════

@timed
def check_pointwise_values(entry: CorpusEntry, h: float, samples: Optional[int] = None) -> CheckResult:
    """Scalar pointwise_average against the field-level extended operator."""
    field = entry.field
    params = SteklovParams.from_h(h, field.time.dt)
    averaged = steklov_average_extended(field, params)
    count = min(field.space.size, samples or VERIFY_CONFIG["pointwise_samples"])
    spatial = sorted(set(np.linspace(0, field.space.size - 1, count).astype(int).tolist()))
    worst = 0.0
    for s in spatial:
        for j in range(field.time.n):
            worst = max(worst, abs(pointwise_average(field, s, j, params) - averaged.values[s, j]))
    scale = field.max_abs
    return CheckResult.identity(
        "lemma-3.1-pointwise-values", entry.name, _parameters(field, params),
        worst, 0.0, TOLERANCE_CONFIG["identity_rtol"] * scale,
        details={"spatial_points": spatial, "scale": scale},
    )


@timed
def check_commutation(entry: CorpusEntry, h: float, axis: int) -> CheckResult:
    """D_i(v_h) = (D_i v)_h on I_h."""
    field = entry.field
    params = SteklovParams.from_h(h, field.time.dt)
    ih_domain(field.time, params)
    lhs = derivative_along(window_means(field.values, params.k), field.space, axis)
    rhs = window_means(derivative_along(field.values, field.space, axis), params.k)
    measured = float(np.abs(lhs - rhs).max())
    scale = max(float(np.abs(rhs).max()), field.max_abs / field.space.spacing[axis])
    return CheckResult.identity(
        "lemma-4.1-commutation", entry.name, _parameters(field, params, axis=axis),
        measured, 0.0, TOLERANCE_CONFIG["identity_rtol"] * scale, details={"scale": scale},
    )


@timed
def check_time_derivative(entry: CorpusEntry, h: float) -> CheckResult:
    """Forward difference of v_h against (v(t+h) - v(t)) / h on the interior of I_h."""
    field = entry.field
    params = SteklovParams.from_h(h, field.time.dt)
    averaged = steklov_average(field, params)
    exact = steklov_time_derivative(field, params)
    if averaged.time.n < 2:
        measured = 0.0
    else:
        measured = float(np.abs(forward_difference(averaged).values - exact.values[:, :-1]).max())
    scale = field.max_abs / params.h
    return CheckResult.identity(
        "lemma-4.2-time-derivative", entry.name, _parameters(field, params),
        measured, 0.0, TOLERANCE_CONFIG["identity_rtol"] * scale,
        details={"scale": scale, "max_derivative": float(np.abs(exact.values).max())},
    )


@timed
def check_ftc(entry_f: CorpusEntry, F0: Optional[SpaceSlice] = None, t0_index: Optional[int] = None) -> CheckResult:
    """
    F = F0 + ∫ f: forward difference of F reproduces f, and integrate_time
    reproduces F(t2) - F(t1). Reports the larger of the two relative defects.
    """
    f = entry_f.field
    n, dt = f.time.n, f.time.dt
    F0 = F0 if F0 is not None else SpaceSlice.zeros(f.space)
    t0_index = n // 2 if t0_index is None else t0_index
    F = cumulative_integral(f, F0, t0_index)
    f_max = f.max_abs
    base = float(np.abs(F0.values).max())

    derivative_scale = f_max + base / dt
    derivative_gap = float(np.abs(forward_difference(F).values - f.values[:, :-1]).max()) if n > 1 else 0.0
    derivative_defect = derivative_gap / derivative_scale if derivative_scale > 0 else derivative_gap

    integral_scale = base + f.time.length * f_max
    pairs = sorted({(0, n - 1), (min(t0_index, n - 1), n - 1), (0, t0_index), (n // 4, (3 * n) // 4)})
    integral_gap = 0.0
    for j1, j2 in pairs:
        span = integrate_time(f, j1, j2).values
        integral_gap = max(integral_gap, float(np.abs(span - (F.values[:, j2] - F.values[:, j1])).max()))
    integral_defect = integral_gap / integral_scale if integral_scale > 0 else integral_gap

    return CheckResult.identity(
        "lemma-5.1-ftc", entry_f.name, _parameters(f, t0_index=t0_index),
        max(derivative_defect, integral_defect), 0.0, TOLERANCE_CONFIG["identity_rtol"],
        details={"derivative_defect": derivative_defect, "integral_defect": integral_defect,
                 "pairs": [list(p) for p in pairs]},
    )


@timed
def check_kernel_oracle(entry: CorpusEntry, h: float) -> CheckResult:
    """Prefix-sum kernel against direct window sums, restricted and extended."""
    field = entry.field
    params = SteklovParams.from_h(h, field.time.dt)
    gaps = {}
    extended = steklov_average_extended(field, params).values
    gaps["extended"] = float(np.abs(extended - naive_average(field, params, extended=True).values).max())
    if params.k <= field.time.n - 1:
        restricted = steklov_average(field, params).values
        gaps["restricted"] = float(np.abs(restricted - naive_average(field, params).values).max())
    scale = field.max_abs
    return CheckResult.identity(
        "kernel-oracle", entry.name, _parameters(field, params),
        max(gaps.values()), 0.0, TOLERANCE_CONFIG["identity_rtol"] * scale,
        details={"gaps": gaps, "scale": scale},
    )


@timed
def check_corpus_oracle(entry: CorpusEntry, h: float) -> CheckResult:
    """‖v_h - closed form‖_∞ <= C·dt on I_h."""
    if entry.oracle_average is None or entry.oracle_dt_constant is None:
        raise CorpusError(f"entry {entry.name} has no closed-form average")
    field = entry.field
    params = SteklovParams.from_h(h, field.time.dt)
    oracle = entry.oracle_average(params.h)
    averaged = steklov_average_extended(field, params).values[:, : oracle.time.n]
    measured = float(np.abs(averaged - oracle.values).max())
    details = {"C": entry.oracle_dt_constant}
    if entry.oracle_average_discrete is not None:
        discrete = entry.oracle_average_discrete(params.h)
        details["discrete_oracle_gap"] = float(np.abs(averaged - discrete.values).max())
    return CheckResult.inequality(
        "corpus-oracle", entry.name, _parameters(field, params),
        measured, entry.oracle_dt_constant * field.time.dt,
        TOLERANCE_CONFIG["inequality_rtol"] * max(field.max_abs, 1.0), details=details,
    )


# ═══════════════════════════════════════════════════════════════
# 🔁 REFINEMENT STUDIES
# ═══════════════════════════════════════════════════════════════

@timed
def check_weak_form(entry: CorpusEntry, axis: int, levels: Optional[int] = None) -> ConvergenceStudy:
    """
    ⟨D_i v(t) | φ⟩ + ⟨v(t) | ∂_i φ⟩ -> 0 at order 2 as dx halves, φ a smooth
    off-centre bump with its analytic derivative.
    """
    levels = levels or VERIFY_CONFIG["weak_form_levels"]
    if levels < 3:
        raise ConvergenceError(f"need >= 3 refinement levels, got {levels}")
    base_space, base_time = entry.field.space, entry.field.time
    if not 0 <= axis < base_space.ndim:
        raise GridError(f"axis {axis} outside 0..{base_space.ndim - 1}")
    stride = max(1, (base_time.n - 1) // VERIFY_CONFIG["weak_form_time_slices"])
    time = TimeGrid(base_time.t0, base_time.dt * stride, (base_time.n - 1) // stride + 1)

    extents = [(s - 1) * dx for s, dx in zip(base_space.shape, base_space.spacing)]
    center = [o + VERIFY_CONFIG["bump_center_fraction"] * e for o, e in zip(base_space.origin, extents)]
    radius = [VERIFY_CONFIG["bump_radius_fraction"] * e for e in extents]

    spacings, errors, scale = [], [], 0.0
    for level in range(levels):
        space = base_space.refine(2 ** level)
        v = entry.resample(space, time).field
        phi = bump_test_function(space, center, radius)
        dphi = bump_gradient(space, axis, center, radius)
        dv = derivative_along(v.values, space, axis)
        residual = (dv.T @ phi.values + v.values.T @ dphi.values) * space.cell_volume
        errors.append(float(np.abs(residual).max()))
        spacings.append(space.spacing[axis])
        scale = max(scale, v.max_abs * float(np.abs(dphi.values).max()) * space.measure)
    return _study(
        "lemma-4.1-weak-form", entry.name, _parameters(entry.field, axis=axis, levels=levels), "dx",
        spacings, spacings, errors, 2.0, TOLERANCE_CONFIG["weak_form_order_window"], scale,
    )


@timed
def check_ibp(entry_f: CorpusEntry, entry_g: CorpusEntry, F0: Optional[SpaceSlice] = None,
              G1: Optional[SpaceSlice] = None, t0_index: int = 0, t1_index: int = 0,
              a_index: int = 0, b_index: Optional[int] = None, levels: Optional[int] = None) -> ConvergenceStudy:
    """
    Continuous-form integration-by-parts residual under dt halving (order 1),
    plus the exact summation-by-parts identity on every level.
    """
    levels = levels or VERIFY_CONFIG["ibp_levels"]
    if levels < 3:
        raise ConvergenceError(f"need >= 3 dt values, got {levels}")
    space, base = entry_f.field.space, entry_f.field.time
    if entry_g.field.space != space or entry_g.field.time != base:
        raise GridError(f"{entry_f.name} and {entry_g.name} live on different grids")
    b_index = base.n - 1 if b_index is None else b_index
    F0 = F0 if F0 is not None else SpaceSlice.zeros(space)
    G1 = G1 if G1 is not None else SpaceSlice.zeros(space)

    dt_values, errors, worst_abel, scale = [], [], 0.0, 0.0
    for level in range(levels):
        factor = 2 ** level
        time = base.refine(factor)
        f = entry_f.resample(space, time).field
        g = entry_g.resample(space, time).field
        residual = integration_by_parts_residual(
            f, g, F0, G1, t0_index * factor, t1_index * factor, a_index * factor, b_index * factor,
        )
        errors.append(float(np.abs(residual.values).max()))
        dt_values.append(time.dt)
        F = cumulative_integral(f, F0, t0_index * factor)
        G = cumulative_integral(g, G1, t1_index * factor)
        worst_abel = max(worst_abel, abel_defect(F, G, a_index * factor, b_index * factor))
        scale = max(scale, f.max_abs * g.max_abs * time.length + float(np.abs(F.values * G.values).max()))

    study = _study(
        "lemma-5.3-integration-by-parts", f"{entry_f.name}*{entry_g.name}",
        {"dt": base.dt, "a_index": a_index, "b_index": b_index, "t0_index": t0_index, "t1_index": t1_index},
        "dt", dt_values, dt_values, errors, 1.0, TOLERANCE_CONFIG["ibp_order_window"], scale,
        details={"abel_defect": worst_abel},
    )
    if worst_abel > TOLERANCE_CONFIG["identity_rtol"]:
        logger.warning("❌ Summation by parts off by %.3e for %s", worst_abel, study.field_name)
        study.passed = False
    return study


# ═══════════════════════════════════════════════════════════════
# 🪜 ABSOLUTE CONTINUITY
# ═══════════════════════════════════════════════════════════════

@timed
def demo_cantor(level: int, absolutely_continuous: bool = False, space: Optional[SpaceGrid] = None,
                time: Optional[TimeGrid] = None) -> CheckResult:
    """
    ∫_a^b f dt against G(b) - G(a) for the Cantor staircase G.
    f ≡ 0 (the a.e. derivative): discrepancy 1, the check passes above
    cantor_discrepancy. With f the discrete difference of G: discrepancy 0.
    """
    G = entry_cantor(level, space, time).field
    n = G.time.n
    if absolutely_continuous:
        f_values = np.zeros(G.values.shape)
        f_values[:, :-1] = forward_difference(G).values
        f = G.with_values(f_values, name="dG")
    else:
        f = G.with_values(np.zeros(G.values.shape), name="zero")
    gap = integrate_time(f, 0, n - 1).values - (G.values[:, -1] - G.values[:, 0])
    measured = float(np.abs(gap).max())
    parameters = _parameters(G, level=level)
    if absolutely_continuous:
        return CheckResult.identity("remark-5.2-cantor-restored", "cantor", parameters,
                                    measured, 0.0, TOLERANCE_CONFIG["identity_rtol"])
    return CheckResult.at_least("remark-5.2-cantor", "cantor", parameters,
                                measured, TOLERANCE_CONFIG["cantor_discrepancy"])
