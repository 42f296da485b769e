"""
Correlation measure data models
"""

import os
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..validation import require, check_nonnegative_values


@dataclass(frozen=True)
class FamilyCorrelations:
    """Joint A|BC value and the two pairwise values of one measure"""
    q_joint: float
    q_ab: float
    q_ac: float

    def __post_init__(self):
        check_nonnegative_values((self.q_joint, self.q_ab, self.q_ac), "family correlations")

    def pairwise_sorted(self) -> tuple:
        """Pairwise values in descending order"""
        return tuple(sorted((self.q_ab, self.q_ac), reverse=True))


@dataclass(frozen=True)
class EoaConfig:
    """Search settings of the entanglement-of-assistance oracle"""
    ensemble_size: int = int(os.getenv("QMONOGAMY_EOA_ENSEMBLE", "8"))
    restarts: int = int(os.getenv("QMONOGAMY_EOA_RESTARTS", "32"))
    max_iterations: int = 400
    step_tolerance: float = 1e-9
    initial_step: float = 0.5
    patience: int = 5  # failed proposals before the step is halved

    def __post_init__(self):
        require(self.ensemble_size >= 1, f"ensemble_size must be >= 1, got {self.ensemble_size}")
        require(self.restarts >= 1, f"restarts must be >= 1, got {self.restarts}")
        require(self.max_iterations >= 0, f"max_iterations must be >= 0, got {self.max_iterations}")
        require(self.step_tolerance > 0, f"step_tolerance must be > 0, got {self.step_tolerance}")


@dataclass(frozen=True)
class AssistanceEstimate:
    """Best ensemble value found by the oracle; a lower bound on the true maximum"""
    value: float
    converged: bool
    evaluations: int
    restarts: int
    # rows are the sub-normalized members attaining value
    ensemble: Optional[np.ndarray] = field(default=None, compare=False, repr=False)

    def __float__(self) -> float:
        return self.value
