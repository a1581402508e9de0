"""
Operators: Bochner norms, Steklov averages, discrete calculus
"""

from .norms import (
    BochnerSpec, parse_exponent, format_exponent, lq_profile, bochner_from_profile,
    lq_space_norm, bochner_norm, ess_sup_time, cumulative_norm_V,
)
from .steklov import (
    SteklovParams, ih_domain, window_means, steklov_average, steklov_average_extended,
    pointwise_average, steklov_time_derivative, naive_average,
)
from .calculus import (
    TestFunction, bump_test_function, bump_gradient, pair, derivative_along, weak_derivative,
    cumulative_integral, integrate_time, forward_difference,
    integration_by_parts_residual, abel_defect,
)

__all__ = [
    'BochnerSpec', 'parse_exponent', 'format_exponent', 'lq_profile', 'bochner_from_profile',
    'lq_space_norm', 'bochner_norm', 'ess_sup_time', 'cumulative_norm_V',
    'SteklovParams', 'ih_domain', 'window_means', 'steklov_average', 'steklov_average_extended',
    'pointwise_average', 'steklov_time_derivative', 'naive_average',
    'TestFunction', 'bump_test_function', 'bump_gradient', 'pair', 'derivative_along',
    'weak_derivative', 'cumulative_integral', 'integrate_time', 'forward_difference',
    'integration_by_parts_residual', 'abel_defect',
]
