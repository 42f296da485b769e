"""
Right-hand sides of the monogamy and polygamy bounds and their algebraic cores

Every RHS is a weighted sum sum_j K^{power_j} v[j]^exponent, where power_j is
the Hamming weight of j (theorem forms) or j itself (corollary forms). Zero
correlations contribute nothing, also at exponent 0, so absent parties drop
out of every sum. All-zero vectors are legal and give 0.
"""

from enum import Enum
from typing import Union

import numpy as np

from ..error_handler import ConditionViolatedError
from ..validation import require
from .models import CoeffParams, VectorLike, as_vector
from .hamming import coeff_K, hamming_weights
from .conditions import monogamy_condition, tail_condition, mixed_condition


class Weighting(Enum):
    HAMMING = "hamming"
    INDEX = "index"


class BaselineKind(Enum):
    PLAIN_SUM = "plain_sum"
    HAMMING_DELTA1 = "hamming_delta1"
    ALPHA_HALF_POWERS = "alpha_half_powers"


def correlation_power(values: np.ndarray, exponent: float) -> np.ndarray:
    """values ** exponent with 0 ** exponent = 0 for every exponent"""
    values = np.asarray(values, dtype=float)
    safe = np.where(values > 0, values, 1.0)
    return np.where(values > 0, safe ** exponent, 0.0)


def zero_power_triggered(v: VectorLike, exponent: float) -> bool:
    """True when the 0 ** 0 = 0 convention changes a sum"""
    return exponent == 0 and any(x == 0 for x in as_vector(v).values)


def _coefficient_powers(n: int, weighting: Weighting) -> np.ndarray:
    if weighting is Weighting.HAMMING:
        return hamming_weights(n)
    return np.arange(n)


def term_contributions(v: VectorLike, exponent: float, p: CoeffParams,
                       weighting: Union[Weighting, str] = Weighting.HAMMING) -> np.ndarray:
    """Per-party terms K^{power_j} v[j]^exponent, K taken at the given exponent"""
    vector = as_vector(v)
    weighting = Weighting(weighting)
    coefficient = coeff_K(p, exponent)
    powers = _coefficient_powers(len(vector), weighting)
    return np.power(coefficient, powers) * correlation_power(vector.as_array(), exponent)


def _require_monogamy_exponent(alpha: float, p: CoeffParams) -> None:
    require(alpha >= p.gamma, f"monogamy exponent alpha={alpha} must be >= gamma={p.gamma}")


def _require_polygamy_exponent(beta: float, p: CoeffParams) -> None:
    require(0 <= beta <= p.gamma, f"polygamy exponent beta={beta} must lie in [0, gamma={p.gamma}]")


def monogamy_rhs_thm1(v: VectorLike, alpha: float, p: CoeffParams) -> float:
    _require_monogamy_exponent(alpha, p)
    return float(np.sum(term_contributions(v, alpha, p, Weighting.HAMMING)))


def monogamy_rhs_cor1(v: VectorLike, alpha: float, p: CoeffParams) -> float:
    _require_monogamy_exponent(alpha, p)
    return float(np.sum(term_contributions(v, alpha, p, Weighting.INDEX)))


def polygamy_rhs_thm2(v: VectorLike, beta: float, p: CoeffParams) -> float:
    _require_polygamy_exponent(beta, p)
    return float(np.sum(term_contributions(v, beta, p, Weighting.HAMMING)))


def polygamy_rhs_cor2(v: VectorLike, beta: float, p: CoeffParams, m: int) -> float:
    """Split-index polygamy bound; K powers 0..m, then m+2 up to N-2, and m+1 for the last party"""
    _require_polygamy_exponent(beta, p)
    vector = as_vector(v)
    report = mixed_condition(vector, p, m)
    if not report.holds:
        raise ConditionViolatedError(
            f"split condition fails at index {report.first_violation} for m={m}",
            failing_index=report.first_violation,
            report=report,
        )
    n = len(vector)
    powers = np.concatenate([np.arange(m + 1), np.full(n - m - 2, m + 2), [m + 1]])
    powered = correlation_power(vector.as_array(), beta)
    return float(np.sum(np.power(coeff_K(p, beta), powers) * powered))


def polygamy_rhs_cor3(v: VectorLike, beta: float, p: CoeffParams) -> float:
    _require_polygamy_exponent(beta, p)
    report = tail_condition(v, p)
    if not report.holds:
        raise ConditionViolatedError(
            f"tail condition fails at index {report.first_violation}",
            failing_index=report.first_violation,
            report=report,
        )
    return float(np.sum(term_contributions(v, beta, p, Weighting.INDEX)))


def baseline_rhs(v: VectorLike, exponent: float, kind: Union[BaselineKind, str],
                 p: CoeffParams) -> float:
    """Prior bounds the Hamming-weight bounds are compared against"""
    kind = BaselineKind(kind)
    vector = as_vector(v)
    require(exponent >= 0, f"exponent must be >= 0, got {exponent}")
    powered = correlation_power(vector.as_array(), exponent)
    if kind is BaselineKind.PLAIN_SUM:
        return float(np.sum(powered))
    if kind is BaselineKind.HAMMING_DELTA1:
        return float(np.sum(term_contributions(vector, exponent, p.with_delta(1.0), Weighting.HAMMING)))
    # concurrence-specific form with ratio alpha/2, monogamy side only
    require(exponent >= max(2.0, p.gamma),
            f"alpha_half_powers is a monogamy bound for exponent >= 2, got {exponent}")
    ratios = np.power(exponent / 2.0, np.arange(len(vector)))
    return float(np.sum(ratios * powered))


def _gamma_sum_power(v: VectorLike, exponent: float, p: CoeffParams) -> float:
    """(sum_j v[j]^gamma)^(exponent/gamma)"""
    total = float(np.sum(correlation_power(as_vector(v).as_array(), p.gamma)))
    return float(correlation_power(np.array([total]), exponent / p.gamma)[0])


def _require_monogamy_condition(v: VectorLike, p: CoeffParams) -> None:
    report = monogamy_condition(v, p)
    if not report.holds:
        raise ConditionViolatedError(
            f"ordered decay condition fails at index {report.first_violation}",
            failing_index=report.first_violation,
            report=report,
        )


def algebraic_monogamy_slack(v: VectorLike, alpha: float, p: CoeffParams) -> float:
    """(sum v^gamma)^(alpha/gamma) - Hamming monogamy RHS"""
    _require_monogamy_condition(v, p)
    return _gamma_sum_power(v, alpha, p) - monogamy_rhs_thm1(v, alpha, p)


def algebraic_polygamy_slack(v: VectorLike, beta: float, p: CoeffParams) -> float:
    """Hamming polygamy RHS - (sum v^gamma)^(beta/gamma)"""
    _require_monogamy_condition(v, p)
    return polygamy_rhs_thm2(v, beta, p) - _gamma_sum_power(v, beta, p)
