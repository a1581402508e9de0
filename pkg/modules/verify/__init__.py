"""
Verification harness: lemma checks, convergence studies, result records
"""

from .results import CheckResult, ConvergenceStudy, timed
from .convergence import estimate_order, decreases, usable_points
from .lemma_checks import (
    check_contraction, check_pointwise_bound, check_lipschitz,
    check_uniform_convergence, check_lr_convergence, check_ae_convergence, summarize_ae_convergence,
    check_pointwise_values, check_commutation, check_time_derivative, check_ftc,
    check_kernel_oracle, check_corpus_oracle, check_weak_form, check_ibp, demo_cantor,
    lr_order_target, exceptional_window,
)

__all__ = [
    'CheckResult', 'ConvergenceStudy', 'timed', 'estimate_order', 'decreases', 'usable_points',
    'check_contraction', 'check_pointwise_bound', 'check_lipschitz',
    'check_uniform_convergence', 'check_lr_convergence', 'check_ae_convergence',
    'summarize_ae_convergence', 'check_pointwise_values', 'check_commutation',
    'check_time_derivative', 'check_ftc', 'check_kernel_oracle', 'check_corpus_oracle',
    'check_weak_form', 'check_ibp', 'demo_cantor', 'lr_order_target', 'exceptional_window',
]
