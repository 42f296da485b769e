"""
Concurrence for pure bipartite cuts and two-qubit mixed states
"""

from typing import Iterable
import math

import numpy as np
import scipy.linalg

from ..config import NUMERICS
from ..validation import require
from ..qstate import PureState, DensityMatrix, schmidt_coefficients

PAULI_Y = np.array([[0, -1j], [1j, 0]])
SPIN_FLIP = np.kron(PAULI_Y, PAULI_Y)


def concurrence_pure(state: PureState, cut: Iterable[int]) -> float:
    """sqrt(2(1 - Tr rho_cut^2)) of a pure state across cut | rest

    Evaluated as 2 sqrt(sum_{i<j} s_i^2 s_j^2) over the Schmidt coefficients s,
    which equals the purity form without cancelling 1 - Tr rho^2 near product states.
    """
    squares = schmidt_coefficients(state, cut) ** 2
    pairs = np.triu(np.outer(squares, squares), k=1)
    return 2.0 * math.sqrt(float(np.sum(pairs)))


def _wootters_product_mu(rho: np.ndarray) -> np.ndarray:
    """Square roots of the eigenvalues of rho (Y x Y) rho* (Y x Y)"""
    rho_tilde = SPIN_FLIP @ rho.conj() @ SPIN_FLIP
    eigenvalues = np.linalg.eigvals(rho @ rho_tilde).real
    # roundoff can leave tiny negative parts on a positive spectrum
    return np.sqrt(np.clip(eigenvalues, 0.0, None))


def _wootters_factored_mu(rho: np.ndarray) -> np.ndarray:
    """Singular values of W^T (Y x Y) W for rho = W W^dagger"""
    values, vectors = scipy.linalg.eigh(rho)
    support = values > NUMERICS.eigen_floor
    factor = vectors[:, support] * np.sqrt(values[support])
    if factor.shape[1] == 0:
        return np.zeros(4)
    tau = factor.T @ SPIN_FLIP @ factor
    mu = np.linalg.svd(tau, compute_uv=False)
    return np.concatenate([mu, np.zeros(4 - mu.shape[0])])


def concurrence_wootters(dm: DensityMatrix, method: str = "factored") -> float:
    """Wootters concurrence max(0, mu1 - mu2 - mu3 - mu4) of a two-qubit state

    The mu are the square roots of the eigenvalues of rho * rho~. "product"
    diagonalizes that non-Hermitian product directly; "factored" obtains the
    same mu as singular values from the eigendecomposition of rho, which keeps
    absolute accuracy near 1e-15 where square roots of roundoff would not.
    """
    require(dm.dim == 4, f"Wootters concurrence needs a two-qubit state, got dim {dm.dim}")
    require(method in ("factored", "product"), f"unknown Wootters method {method!r}")
    if method == "product":
        mu = _wootters_product_mu(dm.entries)
    else:
        mu = _wootters_factored_mu(dm.entries)
    mu = np.sort(mu)[::-1]
    return float(min(1.0, max(0.0, mu[0] - mu[1] - mu[2] - mu[3])))
