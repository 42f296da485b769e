"""
Padding invariant: appending uncorrelated qubits changes no bound input
"""

import numpy as np

from ..config import NUMERICS
from ..validation import require
from ..qstate import PureState, haar_random_state, tensor, partial_trace, density_tensor
from ..measures import concurrence_pure, concurrence_wootters
from .models import PaddingReport


def _max_abs(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.max(np.abs(a - b)))


def padding_check(state: PureState, extra_qubits: int, seed=0) -> PaddingReport:
    """Pad state with random product qubits and compare every (A, party) input"""
    require(extra_qubits >= 1, f"extra_qubits must be >= 1, got {extra_qubits}")
    n = state.num_qubits
    total = n + extra_qubits
    require(n >= 2 and total <= NUMERICS.max_qubits,
            f"cannot pad a {n}-qubit state with {extra_qubits} qubits")
    rng_seed = np.random.SeedSequence(seed)
    extras = [haar_random_state(1, child) for child in rng_seed.spawn(extra_qubits)]
    padded = tensor(state, *extras)

    joint_deviation = abs(concurrence_pure(padded, [0]) - concurrence_pure(state, [0]))
    marginal_deviation = max(
        _max_abs(partial_trace(padded, total, (0, j)).entries, partial_trace(state, n, (0, j)).entries)
        for j in range(1, n)
    )
    rho_a = partial_trace(state, n, [0])
    factorization_deviation = 0.0
    padded_concurrence = 0.0
    for d in range(n, total):
        pair = partial_trace(padded, total, (0, d))
        product = density_tensor(rho_a, partial_trace(padded, total, [d]))
        factorization_deviation = max(factorization_deviation, _max_abs(pair.entries, product.entries))
        padded_concurrence = max(padded_concurrence, concurrence_wootters(pair))

    holds = (joint_deviation <= NUMERICS.norm_tol
             and marginal_deviation <= NUMERICS.norm_tol
             and factorization_deviation <= NUMERICS.norm_tol
             and padded_concurrence <= NUMERICS.spectral_tol)
    return PaddingReport(
        extra_qubits=extra_qubits,
        joint_deviation=joint_deviation,
        marginal_deviation=marginal_deviation,
        factorization_deviation=factorization_deviation,
        padded_concurrence=padded_concurrence,
        holds=holds,
    )
