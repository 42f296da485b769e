"""
Hypothesis checks of the monogamy and polygamy bounds

All checks are strict: a margin must be >= 0 with no tolerance.
"""

from typing import List, Optional, Sequence

import numpy as np

from ..validation import require
from .models import CoeffParams, ConditionReport, VectorLike, as_vector


def _tail_sums(powered: np.ndarray) -> np.ndarray:
    """tails[i] = sum_{l > i} powered[l]"""
    suffix = np.cumsum(powered[::-1])[::-1]
    return np.append(suffix[1:], 0.0)


def monogamy_condition(v: VectorLike, p: CoeffParams) -> ConditionReport:
    """k^delta v[j] >= v[j+1] for j = 0 .. N-2"""
    values = as_vector(v).as_array()
    return ConditionReport.from_margins(p.k_delta * values[:-1] - values[1:])


def tail_condition(v: VectorLike, p: CoeffParams) -> ConditionReport:
    """k^delta v[i]^gamma >= sum_{j > i} v[j]^gamma for i = 0 .. N-2"""
    powered = as_vector(v).as_array() ** p.gamma
    margins = p.k_delta * powered - _tail_sums(powered)
    return ConditionReport.from_margins(margins[:-1])


def mixed_condition(v: VectorLike, p: CoeffParams, m: int) -> ConditionReport:
    """Split hypothesis: tail dominance up to index m, tail domination from m+1 to N-2"""
    vector = as_vector(v)
    n = len(vector)
    require(n >= 3, f"split condition needs N >= 3 parties, got {n}")
    require(0 <= m <= n - 2, f"split index m must lie in [0, {n - 2}], got {m}")
    powered = vector.as_array() ** p.gamma
    tails = _tail_sums(powered)
    margins = [p.k_delta * powered[i] - tails[i] for i in range(m + 1)]
    margins += [p.k_delta * tails[j] - powered[j] for j in range(m + 1, n - 1)]
    return ConditionReport.from_margins(margins)


def admissible_splits(v: VectorLike, p: CoeffParams) -> List[int]:
    """Every split index m for which the split hypothesis holds"""
    vector = as_vector(v)
    if len(vector) < 3:
        return []
    return [m for m in range(len(vector) - 1) if mixed_condition(vector, p, m).holds]


def alpha_half_condition(v: VectorLike, tails: Sequence[Optional[float]]) -> ConditionReport:
    """v[i] >= tails[i+1] for i = 0 .. N-3, where tails[i] is the joint value of A with B_i..B_(N-1)

    Missing tails make the hypothesis unverifiable, reported as not holding.
    """
    values = as_vector(v).values
    require(len(tails) == len(values), "one tail value per party is required")
    margins = []
    for i in range(len(values) - 2):
        tail = tails[i + 1]
        margins.append(float("nan") if tail is None else values[i] - tail)
    return ConditionReport.from_margins(margins)
