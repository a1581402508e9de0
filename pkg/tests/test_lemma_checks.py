import math

import numpy as np
import pytest

from core.errors import ExponentError, WindowError
from modules.corpus import (
    entry_cantor, entry_constant, entry_linear_t, entry_random_smooth, entry_sin_gauss, entry_step,
)
from modules.field import SpaceGrid, SpaceSlice, TimeGrid
from modules.verify import (
    check_ae_convergence, check_commutation, check_contraction, check_corpus_oracle, check_ftc, check_ibp,
    check_kernel_oracle, check_lipschitz, check_lr_convergence, check_pointwise_bound,
    check_pointwise_values, check_time_derivative, check_uniform_convergence, check_weak_form, demo_cantor,
    exceptional_window, lr_order_target, summarize_ae_convergence,
)
from modules.verify.lemma_checks import default_h_list

BUILDERS = [entry_constant, entry_linear_t, entry_sin_gauss, entry_step, entry_cantor, entry_random_smooth]
EXPONENTS = ["1", "2", "inf"]


@pytest.fixture(params=BUILDERS, ids=lambda b: b.__name__)
def entry(request, small_space, small_time):
    return request.param(space=small_space, time=small_time)


# ═══ inequalities ═══

@pytest.mark.parametrize("q", EXPONENTS)
@pytest.mark.parametrize("r", EXPONENTS)
@pytest.mark.parametrize("operator", ["extended", "restricted"])
def test_contraction(entry, q, r, operator):
    h = 8 * entry.field.time.dt
    result = check_contraction(entry, q, r, h, operator)
    assert result.passed, result.to_record()
    assert result.check_id.endswith("contraction")


@pytest.mark.parametrize("q", EXPONENTS)
@pytest.mark.parametrize("r", EXPONENTS)
@pytest.mark.parametrize("k", [1, 64])
def test_pointwise_bound(entry, q, r, k):
    result = check_pointwise_bound(entry, q, r, k * entry.field.time.dt)
    assert result.passed, result.to_record()


@pytest.mark.parametrize("operator", ["restricted", "extended"])
def test_lipschitz(entry, operator):
    result = check_lipschitz(entry, "2", 8 * entry.field.time.dt, operator)
    assert result.passed
    assert result.bound_or_target == pytest.approx(2 * result.details["M"] / (8 * entry.field.time.dt))


def test_contraction_fails_loudly_on_unknown_operator(small_space, small_time):
    with pytest.raises(WindowError):
        check_contraction(entry_constant(space=small_space, time=small_time), 1, 1, small_time.dt, "centred")


def test_contraction_record_names_the_operator(small_space, small_time):
    result = check_contraction(entry_constant(space=small_space, time=small_time), "inf", "2", small_time.dt)
    record = result.to_record()
    assert record["check_id"] == "lemma-2.4d-contraction"
    assert record["parameters"]["q"] == "inf"
    assert record["parameters"]["operator"] == "extended"


@pytest.mark.parametrize("q", EXPONENTS)
@pytest.mark.parametrize("r", EXPONENTS)
def test_restricted_contraction_of_a_constant_is_sharp_on_ih(small_space, small_time, q, r):
    entry = entry_constant(2.0, space=small_space, time=small_time)
    result = check_contraction(entry, q, r, 8 * small_time.dt, "restricted")
    assert result.passed
    assert result.measured == pytest.approx(result.details["bound_on_ih"], rel=1e-12)
    assert "bound_on_ih" not in check_contraction(entry, q, r, 8 * small_time.dt).details


# ═══ convergence ═══

def test_uniform_convergence_is_first_order_for_linear_t(small_space, small_time):
    study = check_uniform_convergence(entry_linear_t(space=small_space, time=small_time), "inf")
    assert study.passed
    assert study.fitted_order == pytest.approx(1.0, abs=1e-9)
    assert study.values[0] == pytest.approx(64 * small_time.dt)
    assert len(study.errors) == 6


def test_uniform_convergence_for_a_constant_has_nothing_to_fit(small_space, small_time):
    study = check_uniform_convergence(entry_constant(space=small_space, time=small_time), "2")
    assert study.fitted_order is None
    assert study.passed


def test_window_ladder_on_coarse_grids():
    assert default_h_list(TimeGrid.over(0.0, 1.0, 129)) == pytest.approx([k / 128 for k in (64, 32, 16, 8, 4, 2)])
    assert default_h_list(TimeGrid.over(0.0, 1.0, 9)) == pytest.approx([0.5, 0.25, 0.125])
    assert len(default_h_list(TimeGrid.over(0.0, 1.0, 5))) == 2


def test_uniform_convergence_on_a_coarse_grid(small_space):
    study = check_uniform_convergence(entry_linear_t(space=small_space, time=TimeGrid.over(0.0, 1.0, 9)), "inf")
    assert study.values == pytest.approx([0.5, 0.25, 0.125])
    assert study.passed


def test_lr_convergence_of_a_step():
    entry = entry_step(space=SpaceGrid.uniform(5))
    first = check_lr_convergence(entry, "1", "1")
    second = check_lr_convergence(entry, "1", "2")
    assert first.passed and first.order_target == 1.0
    assert second.passed and second.order_target == 0.5
    assert first.fitted_order == pytest.approx(1.0, abs=0.15)
    assert second.fitted_order == pytest.approx(0.5, abs=0.15)


def test_lr_convergence_rejects_infinite_r(small_space, small_time):
    with pytest.raises(ExponentError):
        check_lr_convergence(entry_linear_t(space=small_space, time=small_time), "1", "inf")


def test_lr_order_targets(small_space, small_time):
    assert lr_order_target(entry_step(space=small_space, time=small_time), 2.0) == 0.5
    assert lr_order_target(entry_cantor(space=small_space, time=small_time), 1.0) is None
    constant = entry_constant(space=small_space, time=small_time)
    assert lr_order_target(constant, 1.0) == 1.0
    assert lr_order_target(constant, 2.0) is None


def test_ae_convergence_of_a_step_stays_inside_the_declared_window(small_space, small_time):
    entry = entry_step(space=small_space, time=small_time)
    studies = check_ae_convergence(entry, "inf")
    assert len(studies) == small_time.n - 64
    stuck = [s for s in studies if s.details["exceptional"]]
    assert stuck
    assert all(s.details["in_declared_window"] for s in stuck)
    summary = summarize_ae_convergence(entry, studies)
    assert summary.passed
    assert summary.measured == 0.0
    assert summary.details["points_checked"] == len(studies)


def test_exceptional_window_sits_left_of_the_jump(small_space, small_time):
    entry = entry_step(space=small_space, time=small_time)
    window = exceptional_window(entry, 8 * small_time.dt)
    assert window == list(range(56, 64))


def test_ae_convergence_everywhere_for_smooth_fields(small_space, small_time):
    studies = check_ae_convergence(entry_sin_gauss(space=small_space, time=small_time), "2")
    assert all(s.passed for s in studies)
    assert not any(s.details["exceptional"] for s in studies)


# ═══ exact identities ═══

@pytest.mark.parametrize("k", [1, 8, 64])
def test_pointwise_values(entry, k):
    assert check_pointwise_values(entry, k * entry.field.time.dt).passed


@pytest.mark.parametrize("k", [1, 8, 128])
def test_commutation(entry, k):
    result = check_commutation(entry, k * entry.field.time.dt, 0)
    assert result.passed, result.to_record()


def test_commutation_in_two_dimensions():
    space, time = SpaceGrid.uniform(9, ndim=2), TimeGrid.over(0.0, 1.0, 33)
    entry = entry_sin_gauss(space=space, time=time)
    for axis in (0, 1):
        assert check_commutation(entry, 4 * time.dt, axis).passed


def test_commutation_needs_a_nonempty_domain(small_space, small_time):
    with pytest.raises(WindowError):
        check_commutation(entry_linear_t(space=small_space, time=small_time), 129 * small_time.dt, 0)


@pytest.mark.parametrize("k", [1, 8, 64])
def test_time_derivative(entry, k):
    assert check_time_derivative(entry, k * entry.field.time.dt).passed


def test_ftc(entry):
    result = check_ftc(entry)
    assert result.passed, result.details
    shifted = check_ftc(entry, SpaceSlice.constant(entry.field.space, -2.5), 0)
    assert shifted.passed


@pytest.mark.parametrize("k", [1, 2, 64, 128])
def test_kernel_oracle(entry, k):
    assert check_kernel_oracle(entry, k * entry.field.time.dt).passed


def test_kernel_oracle_extended_beyond_the_grid(small_space, small_time):
    result = check_kernel_oracle(entry_linear_t(space=small_space, time=small_time), 200 * small_time.dt)
    assert result.passed
    assert "restricted" not in result.details["gaps"]


@pytest.mark.parametrize("builder", [entry_constant, entry_linear_t, entry_sin_gauss, entry_step,
                                     entry_random_smooth])
def test_corpus_oracle(builder, small_space, small_time):
    entry = builder(space=small_space, time=small_time)
    for k in (1, 8, 64):
        assert check_corpus_oracle(entry, k * small_time.dt).passed


# ═══ refinement studies ═══

def test_weak_form_is_second_order():
    entry = entry_sin_gauss(time=TimeGrid.over(0.0, 1.0, 17))
    study = check_weak_form(entry, 0)
    assert study.variable == "dx"
    assert study.values[0] == pytest.approx(1 / 64)
    assert study.passed, (study.fitted_order, study.errors)


def test_ibp_for_constants_is_first_order():
    space, time = SpaceGrid.uniform(3), TimeGrid.over(0.0, 1.0, 9)
    entry = entry_constant(space=space, time=time)
    study = check_ibp(entry, entry)
    assert study.passed
    assert study.fitted_order == pytest.approx(1.0, abs=1e-6)
    assert study.details["abel_defect"] <= 1e-12
    assert study.values == [time.dt / 2 ** level for level in range(5)]


def test_ibp_for_smooth_pair():
    space, time = SpaceGrid.uniform(5), TimeGrid.over(0.0, 1.0, 17)
    study = check_ibp(entry_linear_t(space=space, time=time), entry_sin_gauss(space=space, time=time))
    assert study.passed, (study.fitted_order, study.errors)


# ═══ absolute continuity ═══

@pytest.mark.parametrize("level", [1, 5, 8])
def test_cantor_discrepancy(level, small_space):
    broken = demo_cantor(level, space=small_space)
    assert broken.passed
    assert broken.measured == pytest.approx(1.0, abs=1e-12)
    restored = demo_cantor(level, absolutely_continuous=True, space=small_space)
    assert restored.check_id == "remark-5.2-cantor-restored"
    assert restored.passed and restored.measured <= 1e-12
