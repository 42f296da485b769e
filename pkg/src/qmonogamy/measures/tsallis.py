"""
Tsallis-q entropy and the Tsallis-q entanglement of pure states
"""

from typing import Iterable

import numpy as np

from ..validation import check_positive
from ..config import NUMERICS
from ..qstate import PureState, DensityMatrix, partial_trace


def tsallis_from_probabilities(probabilities: np.ndarray, q: float) -> float:
    """(1 - sum p^q)/(q - 1), or the natural-log Shannon entropy at q = 1

    Only probabilities at or below the roundoff floor NUMERICS.eigen_floor are dropped.
    """
    p = np.asarray(probabilities, dtype=float)
    p = p[p > NUMERICS.eigen_floor]
    if q == 1.0:
        return float(max(0.0, -np.sum(p * np.log(p))))
    # sum p^q - 1 = sum p (p^(q-1) - 1), expm1 keeps digits near q = 1
    excess = np.sum(p * np.expm1((q - 1.0) * np.log(p)))
    return float(max(0.0, -excess / (q - 1.0)))


def tsallis_entropy(dm: DensityMatrix, q: float) -> float:
    check_positive(q, "q")
    return tsallis_from_probabilities(dm.eigenvalues(), float(q))


def tsallis_entanglement_pure(state: PureState, cut: Iterable[int], q: float) -> float:
    """Tsallis-q entropy of the cut marginal of a pure state"""
    check_positive(q, "q")
    return tsallis_entropy(partial_trace(state, state.num_qubits, cut), q)


def batched_two_qubit_tsallis(vectors: np.ndarray, q: float) -> np.ndarray:
    """Tsallis-q entanglement of each normalized row of an (m, 4) array"""
    blocks = vectors.reshape(-1, 2, 2)
    marginals = blocks @ np.conj(np.swapaxes(blocks, 1, 2))
    eigenvalues = np.clip(np.linalg.eigvalsh(marginals), 0.0, 1.0)
    return np.array([tsallis_from_probabilities(row, q) for row in eigenvalues])
