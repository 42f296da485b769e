"""
Numeric Tsallis-q entanglement of assistance for two-qubit states

Every size-m pure-state ensemble of a rank-r state arises from an m x r
isometry U applied to the sub-normalized eigenvectors w_k = sqrt(e_k) v_k:
psi~_i = sum_k U_ik w_k, p_i = |psi~_i|^2. The oracle maximizes the ensemble
value over U by random restarts followed by a perturbative hill climb, so the
returned value is always attained by an explicit ensemble and is a lower bound
on the true maximum.
"""

from typing import Optional, Sequence, Tuple

import numpy as np
import scipy.linalg
from loguru import logger

from ..config import NUMERICS
from ..validation import require, check_positive
from ..qstate import DensityMatrix
from .models import EoaConfig, AssistanceEstimate
from .tsallis import batched_two_qubit_tsallis


def eigen_ensemble(dm: DensityMatrix) -> np.ndarray:
    """Sub-normalized eigenvectors of the nonzero spectrum, one per row"""
    values, vectors = scipy.linalg.eigh(dm.entries)
    support = values > NUMERICS.spectral_tol
    return (vectors[:, support] * np.sqrt(values[support])).T


def ensemble_value(ensemble: np.ndarray, q: float) -> float:
    """sum_i p_i T_q(psi_i) for an (m, 4) array of sub-normalized two-qubit vectors"""
    ensemble = np.asarray(ensemble, dtype=complex)
    weights = np.sum(np.abs(ensemble) ** 2, axis=1)
    present = weights > NUMERICS.spectral_tol ** 2
    if not np.any(present):
        return 0.0
    normalized = ensemble[present] / np.sqrt(weights[present])[:, None]
    return float(np.dot(weights[present], batched_two_qubit_tsallis(normalized, q)))


def _isometry(generator: np.ndarray) -> np.ndarray:
    q_factor, _ = np.linalg.qr(generator)
    return q_factor


class AssistanceSearch:
    """Hill-climbing search over isometries for one density matrix"""

    def __init__(self, dm: DensityMatrix, q: float, config: EoaConfig):
        self.q = q
        self.config = config
        self.basis = eigen_ensemble(dm)
        self.rank = self.basis.shape[0]
        self.size = max(config.ensemble_size, self.rank)
        self.evaluations = 0

    def value_of(self, generator: np.ndarray) -> float:
        self.evaluations += 1
        return ensemble_value(_isometry(generator) @ self.basis, self.q)

    def climb(self, generator: np.ndarray, rng: np.random.Generator) -> Tuple[float, bool, np.ndarray]:
        """Refine one starting point; returns (value, step fell below tolerance, best generator)"""
        best = self.value_of(generator)
        step = self.config.initial_step
        failures = 0
        for _ in range(self.config.max_iterations):
            if step < self.config.step_tolerance:
                return best, True, generator
            noise = rng.standard_normal(generator.shape) + 1j * rng.standard_normal(generator.shape)
            candidate = generator + step * noise
            value = self.value_of(candidate)
            if value > best:
                generator, best, failures = candidate, value, 0
            else:
                failures += 1
                if failures >= self.config.patience:
                    step, failures = step / 2, 0
        return best, step < self.config.step_tolerance, generator

    def starting_point(self, restart: int, rng: np.random.Generator) -> np.ndarray:
        if restart == 0:
            generator = np.zeros((self.size, self.rank), dtype=complex)
            generator[: self.rank, : self.rank] = np.eye(self.rank)
            return generator
        return rng.standard_normal((self.size, self.rank)) + 1j * rng.standard_normal((self.size, self.rank))


def teoa_oracle(dm: DensityMatrix, q: float, config: Optional[EoaConfig] = None,
                seed: int = 0) -> AssistanceEstimate:
    """Best found max over ensembles of sum_i p_i T_q(psi_i) for a two-qubit state"""
    require(dm.dim == 4, f"assistance oracle needs a two-qubit state, got dim {dm.dim}")
    check_positive(q, "q")
    config = config or EoaConfig()
    search = AssistanceSearch(dm, float(q), config)

    if search.rank == 1:
        value = ensemble_value(search.basis, q)
        return AssistanceEstimate(value=value, converged=True, evaluations=1, restarts=0, ensemble=search.basis)

    best, best_converged, best_generator = -np.inf, False, None
    for restart in range(config.restarts):
        rng = np.random.default_rng([seed, restart])
        value, converged, generator = search.climb(search.starting_point(restart, rng), rng)
        if value > best:
            best, best_converged, best_generator = value, converged, generator

    if not best_converged:
        logger.warning(f"Assistance oracle did not converge (q={q}); reporting best-effort value {best:.12g}")
    return AssistanceEstimate(
        value=float(best),
        converged=best_converged,
        evaluations=search.evaluations,
        restarts=config.restarts,
        ensemble=_isometry(best_generator) @ search.basis,
    )


def explicit_ensemble(vectors: Sequence[Sequence[complex]]) -> np.ndarray:
    """Stack sub-normalized vectors into an ensemble array"""
    return np.array([np.asarray(v, dtype=complex) for v in vectors])
