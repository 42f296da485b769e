"""
Input validation shared by the qstate, measures and bounds packages
"""

from enum import Enum
from typing import Iterable, Tuple, Type, TypeVar
import math

import numpy as np

from .error_handler import InvalidInputError

E = TypeVar("E", bound=Enum)


def require(condition: bool, message: str) -> None:
    """Raise InvalidInputError with message unless condition holds"""
    if not condition:
        raise InvalidInputError(message)


def check_qubit_count(num_qubits: int, max_qubits: int) -> int:
    require(isinstance(num_qubits, (int, np.integer)) and not isinstance(num_qubits, bool),
            f"num_qubits must be an integer, got {num_qubits!r}")
    require(1 <= num_qubits <= max_qubits,
            f"num_qubits must lie in [1, {max_qubits}], got {num_qubits}")
    return int(num_qubits)


def check_qubit_subset(indices: Iterable[int], total_qubits: int) -> Tuple[int, ...]:
    """Validate a nonempty strict subset of {0, ..., total_qubits-1}; returns it sorted"""
    subset = tuple(sorted({int(i) for i in indices}))
    require(len(subset) > 0, "qubit subset must not be empty")
    require(all(0 <= i < total_qubits for i in subset),
            f"qubit indices {subset} out of range for {total_qubits} qubits")
    require(len(subset) < total_qubits,
            f"qubit subset {subset} must be a strict subset of all {total_qubits} qubits")
    return subset


def check_positive(value: float, name: str) -> float:
    require(math.isfinite(value) and value > 0, f"{name} must be > 0, got {value}")
    return float(value)


def check_interval(value: float, low: float, high: float, name: str) -> float:
    require(math.isfinite(value) and low <= value <= high,
            f"{name} must lie in [{low}, {high}], got {value}")
    return float(value)


def check_nonnegative_values(values: Iterable[float], name: str) -> Tuple[float, ...]:
    values = tuple(float(v) for v in values)
    require(all(math.isfinite(v) and v >= 0 for v in values),
            f"{name} must be finite and nonnegative, got {values}")
    return values


def check_choice(enum_type: Type[E], value: object, name: str) -> E:
    """Coerce value into enum_type, rejecting unknown names with InvalidInputError"""
    try:
        return enum_type(value)
    except ValueError:
        choices = ", ".join(str(member.value) for member in enum_type)
        raise InvalidInputError(f"{name} must be one of {choices}, got {value!r}") from None
