"""
Hamming weights, the coefficient K^delta_x and the scalar lemma inequalities
"""

import numpy as np

from ..validation import require
from .models import CoeffParams


def hamming_weight(j: int) -> int:
    """Number of 1 bits in the binary expansion of j"""
    require(int(j) == j and j >= 0, f"hamming weight needs a nonnegative integer, got {j}")
    j = int(j)
    count = 0
    while j:
        count += 1
        j &= j - 1
    return count


def hamming_weights(n: int) -> np.ndarray:
    """Weights of 0, 1, ..., n-1"""
    return np.array([hamming_weight(j) for j in range(n)], dtype=int)


def coeff_K(p: CoeffParams, x: float) -> float:
    """((1 + k^delta)^(x/gamma) - 1) / k^(delta x / gamma); exactly 1 at x = gamma"""
    require(x >= 0, f"coefficient exponent must be >= 0, got {x}")
    if x == p.gamma:
        return 1.0
    ratio = x / p.gamma
    return ((1.0 + p.k_delta) ** ratio - 1.0) / p.k_delta ** ratio


def lemma_coeff(p: CoeffParams, x: float) -> float:
    """K^delta_x with the exponent used directly (gamma = 1)"""
    return coeff_K(CoeffParams(p.k, p.delta, 1.0), x)


def _check_lemma_t(t: float, p: CoeffParams) -> None:
    require(0 <= t <= p.k_delta, f"t must lie in [0, k^delta] = [0, {p.k_delta}], got {t}")


def lemma_lower_slack(t: float, x: float, p: CoeffParams) -> float:
    """(1 + t)^x - 1 - K^delta_x t^x for x >= 1"""
    _check_lemma_t(t, p)
    require(x >= 1, f"lower lemma needs x >= 1, got {x}")
    return (1.0 + t) ** x - 1.0 - lemma_coeff(p, x) * t ** x


def lemma_upper_slack(t: float, y: float, p: CoeffParams) -> float:
    """1 + K^delta_y t^y - (1 + t)^y for 0 <= y <= 1"""
    _check_lemma_t(t, p)
    require(0 <= y <= 1, f"upper lemma needs 0 <= y <= 1, got {y}")
    return 1.0 + lemma_coeff(p, y) * t ** y - (1.0 + t) ** y
