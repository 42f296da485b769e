"""
Verification data models
"""

from dataclasses import dataclass, field, asdict
from enum import Enum
from typing import Dict, List, Optional, Tuple

import pandas as pd

from ..bounds import ConditionReport
from ..error_handler import BoundViolation


class Direction(Enum):
    MONOGAMY = "monogamy"
    POLYGAMY = "polygamy"


@dataclass(frozen=True)
class BoundReport:
    """One (sample, exponent) comparison of the joint value against every bound"""
    sample_index: int
    exponent: float
    direction: Direction
    values: Tuple[float, ...]
    lhs: Optional[float]
    condition: ConditionReport
    rhs_thm: float
    rhs_cor: Optional[float]
    rhs_baselines: Dict[str, float]
    slack: Optional[float]
    terms: Tuple[float, ...] = ()
    tail_condition_holds: bool = False
    rhs_cor2_best: Optional[float] = None
    residual: Optional[float] = None
    zero_convention: bool = False

    @property
    def claimed(self) -> bool:
        """Bounds are claimed only when the ordered decay hypothesis holds"""
        return self.condition.holds

    @property
    def tightness_rank(self) -> List[str]:
        """Bound names ordered tightest first"""
        bounds = {"thm": self.rhs_thm, **self.rhs_baselines}
        if self.rhs_cor is not None:
            bounds["cor"] = self.rhs_cor
        descending = self.direction is Direction.MONOGAMY
        return [name for name, _ in sorted(bounds.items(), key=lambda kv: kv[1], reverse=descending)]

    def violates(self, tolerance: float) -> bool:
        return self.slack is not None and self.slack < -tolerance

    def row(self) -> Dict[str, object]:
        """Flat record with the report column names"""
        return {
            "sample_index": self.sample_index,
            "exponent": self.exponent,
            "lhs": self.lhs,
            "rhs_thm": self.rhs_thm,
            "rhs_cor": self.rhs_cor,
            "rhs_plain": self.rhs_baselines.get("plain_sum"),
            "rhs_delta1": self.rhs_baselines.get("hamming_delta1"),
            "condition_holds": self.condition.holds,
            "slack": self.slack,
        }


@dataclass
class SweepResult:
    """Reports of one sweep together with its acceptance and violation summary"""
    reports: List[BoundReport]
    attempts: int
    accepted: int
    rejected: int
    violations: List[BoundViolation] = field(default_factory=list)
    outside_hypothesis_violations: int = 0
    max_residual: Optional[float] = None

    @property
    def acceptance_rate(self) -> float:
        return self.accepted / self.attempts if self.attempts else 0.0

    def summary(self) -> Dict[str, object]:
        return {
            "attempts": self.attempts,
            "accepted": self.accepted,
            "rejected": self.rejected,
            "acceptance_rate": self.acceptance_rate,
            "violations": len(self.violations),
            "outside_hypothesis_violations": self.outside_hypothesis_violations,
            "max_residual": self.max_residual,
        }


@dataclass(frozen=True)
class FigureTable:
    """Exponent grid with the true value and the new and prior bounds"""
    exponent_name: str
    value_names: Tuple[str, str, str]
    direction: Direction
    rows: Tuple[Tuple[float, float, float, float], ...]

    @property
    def columns(self) -> List[str]:
        return [self.exponent_name, *self.value_names]

    def to_frame(self, with_gaps: bool = False) -> pd.DataFrame:
        frame = pd.DataFrame(list(self.rows), columns=self.columns)
        if with_gaps:
            gaps = self.gaps()
            frame["gap_prior"] = [g[0] for g in gaps]
            frame["gap_true"] = [g[1] for g in gaps]
        return frame

    def gaps(self) -> List[Tuple[float, float]]:
        """(improvement over the prior bound, distance of the new bound to the true value) per row"""
        if self.direction is Direction.MONOGAMY:
            return [(new - prior, true - new) for _, true, new, prior in self.rows]
        return [(prior - new, new - true) for _, true, new, prior in self.rows]

    def ordering_violations(self, tolerance: float = 1e-12) -> List[int]:
        """Rows where true/new/prior are out of the expected order"""
        broken = []
        for index, (_, true, new, prior) in enumerate(self.rows):
            if self.direction is Direction.MONOGAMY:
                ok = true >= new - tolerance and new >= prior - tolerance
            else:
                ok = true <= new + tolerance and new <= prior + tolerance
            if not ok:
                broken.append(index)
        return broken


@dataclass(frozen=True)
class ScanRow:
    k: float
    delta: float
    condition_holds: bool
    rhs: float
    tightest: bool = False


@dataclass(frozen=True)
class PaddingReport:
    """Deviations observed after appending uncorrelated qubits"""
    extra_qubits: int
    joint_deviation: float
    marginal_deviation: float
    factorization_deviation: float
    padded_concurrence: float
    holds: bool

    def as_dict(self) -> Dict[str, object]:
        return asdict(self)
