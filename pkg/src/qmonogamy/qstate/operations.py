"""
State construction, reduction and sampling

Qubit 0 is the leftmost ket label, so basis index |q0 q1 ... q(n-1)> is the
big-endian binary integer. Reductions keep the surviving qubits in ascending
original order.
"""

from typing import Iterable, Sequence, Union
import cmath
import math

import numpy as np

from ..config import NUMERICS
from ..validation import require, check_qubit_count, check_qubit_subset
from .models import PureState, DensityMatrix, SchmidtParams

HAAR_MAX_QUBITS = 12


def schmidt_state(params: SchmidtParams) -> PureState:
    """Build lambda0|000> + lambda1 e^{i phi}|100> + lambda2|101> + lambda3|110> + lambda4|111>"""
    amplitudes = np.zeros(8, dtype=complex)
    amplitudes[0b000] = params.lambda0
    amplitudes[0b100] = params.lambda1 * cmath.exp(1j * params.phi)
    amplitudes[0b101] = params.lambda2
    amplitudes[0b110] = params.lambda3
    amplitudes[0b111] = params.lambda4
    return PureState(3, amplitudes)


def basis_state(bits: str) -> PureState:
    """Computational basis state from a bit string such as '010'"""
    require(len(bits) > 0 and set(bits) <= {"0", "1"}, f"invalid bit string {bits!r}")
    amplitudes = np.zeros(2 ** len(bits), dtype=complex)
    amplitudes[int(bits, 2)] = 1.0
    return PureState(len(bits), amplitudes)


def tensor(*states: PureState) -> PureState:
    """Tensor product of pure states, first argument on the left"""
    require(len(states) > 0, "tensor needs at least one state")
    amplitudes = np.array([1.0 + 0j])
    for state in states:
        amplitudes = np.kron(amplitudes, state.amplitudes)
    return PureState(sum(s.num_qubits for s in states), amplitudes)


def density_of(state: PureState) -> DensityMatrix:
    """Projector |psi><psi|"""
    psi = state.amplitudes
    return DensityMatrix(state.dim, np.outer(psi, psi.conj()))


def density_tensor(*matrices: DensityMatrix) -> DensityMatrix:
    entries = np.array([[1.0 + 0j]])
    for matrix in matrices:
        entries = np.kron(entries, matrix.entries)
    return DensityMatrix(entries.shape[0], entries)


def _grouped_amplitudes(state: PureState, kept: Sequence[int]) -> np.ndarray:
    """Amplitudes as a (2^|kept|, 2^rest) matrix"""
    rest = [q for q in range(state.num_qubits) if q not in kept]
    psi = state.amplitudes.reshape([2] * state.num_qubits)
    return np.transpose(psi, list(kept) + rest).reshape(2 ** len(kept), -1)


def _hermitize(entries: np.ndarray) -> np.ndarray:
    return (entries + entries.conj().T) / 2


def partial_trace(state: Union[PureState, DensityMatrix], total_qubits: int,
                  keep: Iterable[int]) -> DensityMatrix:
    """Reduced density matrix on the qubits in keep"""
    check_qubit_count(total_qubits, NUMERICS.max_qubits)
    kept = check_qubit_subset(keep, total_qubits)
    traced = [q for q in range(total_qubits) if q not in kept]
    dim_keep = 2 ** len(kept)

    if isinstance(state, PureState):
        require(state.num_qubits == total_qubits,
                f"state has {state.num_qubits} qubits, expected {total_qubits}")
        # rho_keep = M M^dagger with M the amplitudes grouped as (kept, traced)
        matrix = _grouped_amplitudes(state, kept)
        reduced = matrix @ matrix.conj().T
    else:
        require(state.dim == 2 ** total_qubits,
                f"density matrix of dim {state.dim} does not match {total_qubits} qubits")
        rho = state.entries.reshape([2] * (2 * total_qubits))
        row_axes = list(kept) + traced
        col_axes = [total_qubits + q for q in row_axes]
        rho = np.transpose(rho, row_axes + col_axes)
        rho = rho.reshape(dim_keep, 2 ** len(traced), dim_keep, 2 ** len(traced))
        reduced = np.einsum("ikjk->ij", rho)

    return DensityMatrix(dim_keep, _hermitize(reduced))


def haar_random_state(num_qubits: int, seed: Union[int, Sequence[int], np.random.SeedSequence]) -> PureState:
    """Haar-distributed pure state: a normalized vector of iid standard complex Gaussians"""
    require(isinstance(num_qubits, (int, np.integer)) and 1 <= num_qubits <= HAAR_MAX_QUBITS,
            f"num_qubits must lie in [1, {HAAR_MAX_QUBITS}], got {num_qubits}")
    rng = np.random.default_rng(seed)
    dim = 2 ** int(num_qubits)
    vector = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    vector /= np.linalg.norm(vector)
    return PureState(int(num_qubits), vector)


def purity(dm: DensityMatrix) -> float:
    """Tr(rho^2)"""
    entries = dm.entries
    # Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
    value = float(np.sum(np.abs(entries) ** 2))
    return min(max(value, 1.0 / dm.dim), 1.0)


def spectrum(dm: DensityMatrix, drop_zeros: bool = False) -> np.ndarray:
    """Descending eigenvalues with roundoff negatives clamped to zero"""
    values = dm.eigenvalues()[::-1]
    if drop_zeros:
        values = values[values > NUMERICS.spectral_tol]
    return values


def random_local_unitary(num_qubits: int, seed) -> np.ndarray:
    """Tensor product of independent Haar single-qubit unitaries"""
    rng = np.random.default_rng(seed)
    unitary = np.array([[1.0 + 0j]])
    for _ in range(num_qubits):
        z = (rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))) / math.sqrt(2)
        q, r = np.linalg.qr(z)
        d = np.diagonal(r)
        unitary = np.kron(unitary, q * (d / np.abs(d)))
    return unitary


def conjugate(dm: DensityMatrix, unitary: np.ndarray) -> DensityMatrix:
    """U rho U^dagger"""
    return DensityMatrix(dm.dim, _hermitize(unitary @ dm.entries @ unitary.conj().T))


def schmidt_coefficients(state: PureState, cut: Iterable[int]) -> np.ndarray:
    """Descending singular values of the amplitudes grouped as (cut, rest)"""
    kept = check_qubit_subset(cut, state.num_qubits)
    return np.linalg.svd(_grouped_amplitudes(state, kept), compute_uv=False)
