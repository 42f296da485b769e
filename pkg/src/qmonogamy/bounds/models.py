"""
Bound evaluation data models
"""

from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple, Union
import math

import numpy as np

from ..validation import require, check_nonnegative_values


@dataclass(frozen=True)
class CoeffParams:
    """Parameters (k, delta, gamma) of the coefficient K^delta_x"""
    k: float
    delta: float
    gamma: float

    def __post_init__(self):
        require(math.isfinite(self.k) and 0 < self.k <= 1, f"k must lie in (0, 1], got {self.k}")
        require(math.isfinite(self.delta) and self.delta >= 1, f"delta must be >= 1, got {self.delta}")
        require(math.isfinite(self.gamma) and self.gamma > 0, f"gamma must be > 0, got {self.gamma}")

    @property
    def k_delta(self) -> float:
        return self.k ** self.delta

    def with_delta(self, delta: float) -> "CoeffParams":
        return CoeffParams(self.k, delta, self.gamma)


@dataclass(frozen=True)
class CorrelationVector:
    """Pairwise values Q_AB0 .. Q_AB(N-1), optionally with the joint value Q_A|B0..B(N-1)"""
    values: Tuple[float, ...]
    joint: Optional[float] = None

    def __post_init__(self):
        values = check_nonnegative_values(self.values, "correlation values")
        require(len(values) >= 1, "a correlation vector needs at least one party")
        if self.joint is not None:
            check_nonnegative_values((self.joint,), "joint correlation")
            object.__setattr__(self, "joint", float(self.joint))
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return len(self.values)

    def as_array(self) -> np.ndarray:
        return np.array(self.values, dtype=float)

    def sorted_descending(self) -> "CorrelationVector":
        return CorrelationVector(tuple(sorted(self.values, reverse=True)), self.joint)


VectorLike = Union[CorrelationVector, Sequence[float]]


def as_vector(v: VectorLike) -> CorrelationVector:
    return v if isinstance(v, CorrelationVector) else CorrelationVector(tuple(v))


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of a hypothesis check; margins[i] >= 0 for every constraint iff holds"""
    holds: bool
    first_violation: Optional[int] = None
    margins: Tuple[float, ...] = field(default_factory=tuple)

    @classmethod
    def from_margins(cls, margins: Sequence[float]) -> "ConditionReport":
        margins = tuple(float(m) for m in margins)
        failing = [i for i, m in enumerate(margins) if not m >= 0]
        return cls(holds=not failing, first_violation=failing[0] if failing else None, margins=margins)
