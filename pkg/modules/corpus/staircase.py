"""
Level-L piecewise-linear approximation of the Cantor-Lebesgue function on [0, 1]
"""

import numpy as np


def cantor_staircase(x: np.ndarray, level: int) -> np.ndarray:
    """
    G_L(x): flat at the midpoint value on every removed middle third down to
    depth L, linear on the 2^L surviving intervals. G_L(0) = 0, G_L(1) = 1.
    """
    x = np.clip(np.asarray(x, dtype=np.float64), 0.0, 1.0)
    result = np.zeros_like(x)
    weight = 1.0
    active = np.ones(x.shape, dtype=bool)
    for _ in range(level):
        x3 = 3.0 * x
        left = active & (x3 < 1.0)
        middle = active & (x3 >= 1.0) & (x3 < 2.0)
        right = active & (x3 >= 2.0)
        result[middle] += 0.5 * weight
        result[right] += 0.5 * weight
        x = np.where(left, x3, np.where(right, x3 - 2.0, x))
        active = left | right
        weight *= 0.5
    result[active] += weight * x[active]
    return result
