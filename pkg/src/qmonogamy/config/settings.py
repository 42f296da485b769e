"""
Numerical tolerances and size limits
"""

import os
from dataclasses import dataclass


@dataclass(frozen=True)
class NumericsConfig:
    """Tolerances shared by every module"""
    norm_tol: float = float(os.getenv("QMONOGAMY_NORM_TOL", "1e-12"))
    spectral_tol: float = float(os.getenv("QMONOGAMY_SPECTRAL_TOL", "1e-10"))
    slack_tol_state: float = 1e-10  # state-derived checks lose ~2 digits
    slack_tol_arith: float = 1e-12
    eigen_floor: float = 1e-13  # eigenvalues below are roundoff
    max_qubits: int = int(os.getenv("QMONOGAMY_MAX_QUBITS", "12"))


NUMERICS = NumericsConfig()
