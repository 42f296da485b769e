"""
Error Handler Module for inequality verification
"""

from typing import Optional, Dict, Any, List
from dataclasses import dataclass, field
from datetime import datetime
from loguru import logger


class QMonogamyError(Exception):
    """Base class for all qmonogamy errors"""


class InvalidInputError(QMonogamyError, ValueError):
    """Raised when an operation rejects its input"""


class ConditionViolatedError(InvalidInputError):
    """Raised when a bound is requested but its hypothesis does not hold"""

    def __init__(self, message: str, failing_index: Optional[int] = None, report: Any = None):
        super().__init__(message)
        self.failing_index = failing_index
        self.report = report


class ReportWriteError(QMonogamyError):
    """Raised when an output file cannot be written"""


@dataclass
class BoundViolation:
    """Represents an inequality found violated beyond tolerance"""
    kind: str
    message: str
    operation: str
    details: Optional[Dict[str, Any]] = None
    timestamp: datetime = field(default_factory=datetime.now)


class ViolationHandler:
    """Collects inequality violations raised during verification runs"""

    VIOLATION_KINDS = {
        "lemma": "Scalar lemma slack negative",
        "monogamy": "Monogamy bound exceeded the joint correlation",
        "polygamy": "Polygamy bound fell below the joint correlation",
        "algebraic": "Algebraic core slack negative",
        "tightness": "Tightness chain out of order",
        "figure": "Figure ordering broken",
        "residual": "Analytic and numeric values disagree",
        "padding": "Padded subsystem not uncorrelated",
    }

    def __init__(self):
        self.violations: List[BoundViolation] = []

    def record(self, kind: str, operation: str, message: str,
               details: Optional[Dict[str, Any]] = None) -> BoundViolation:
        """Record a violation and log the full reproducing sample"""
        violation = BoundViolation(
            kind=kind,
            message=message,
            operation=operation,
            details=details,
        )
        self.violations.append(violation)
        logger.error(f"{self.VIOLATION_KINDS[kind]}: {message} in {operation} | sample={details}")
        return violation

    @property
    def has_violations(self) -> bool:
        return bool(self.violations)

    def get_error_summary(self) -> Dict[str, int]:
        """Get a summary of violations by kind"""
        summary: Dict[str, int] = {}
        for violation in self.violations:
            summary[violation.kind] = summary.get(violation.kind, 0) + 1
        return summary
