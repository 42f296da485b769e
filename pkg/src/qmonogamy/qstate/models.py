"""
Quantum state data models
"""

from dataclasses import dataclass
import math

import numpy as np

from ..config import NUMERICS
from ..validation import require, check_qubit_count


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=complex)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class PureState:
    """Normalized amplitude vector over num_qubits qubits, big-endian basis order"""
    num_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        check_qubit_count(self.num_qubits, NUMERICS.max_qubits)
        amplitudes = _frozen(self.amplitudes).reshape(-1)
        require(amplitudes.shape[0] == 2 ** self.num_qubits,
                f"expected {2 ** self.num_qubits} amplitudes, got {amplitudes.shape[0]}")
        norm = float(np.vdot(amplitudes, amplitudes).real)
        require(abs(norm - 1.0) <= NUMERICS.norm_tol,
                f"state is not normalized: squared norm {norm!r}")
        object.__setattr__(self, "amplitudes", amplitudes)

    @property
    def dim(self) -> int:
        return 2 ** self.num_qubits


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, positive semidefinite, unit-trace matrix"""
    dim: int
    entries: np.ndarray

    def __post_init__(self):
        entries = _frozen(self.entries)
        require(entries.shape == (self.dim, self.dim),
                f"expected a {self.dim}x{self.dim} matrix, got shape {entries.shape}")
        require(np.allclose(entries, entries.conj().T, rtol=0.0, atol=NUMERICS.norm_tol),
                "density matrix is not Hermitian")
        trace = complex(np.trace(entries))
        require(abs(trace - 1.0) <= NUMERICS.norm_tol, f"density matrix trace is {trace!r}, not 1")
        smallest = float(np.linalg.eigvalsh(entries)[0])
        require(smallest >= -NUMERICS.spectral_tol,
                f"density matrix has negative eigenvalue {smallest!r}")
        object.__setattr__(self, "entries", entries)

    @property
    def num_qubits(self) -> int:
        return int(round(math.log2(self.dim)))

    def eigenvalues(self) -> np.ndarray:
        """Ascending eigenvalues, with roundoff negatives clamped to zero"""
        values = np.linalg.eigvalsh(self.entries)
        return np.where((values < 0) & (values > -NUMERICS.spectral_tol), 0.0, values)


@dataclass(frozen=True)
class SchmidtParams:
    """Amplitudes and phase of the generalized Schmidt form of a three-qubit state"""
    lambda0: float
    lambda1: float
    lambda2: float
    lambda3: float
    lambda4: float
    phi: float = 0.0

    def __post_init__(self):
        lambdas = self.lambdas
        require(all(math.isfinite(x) and x >= 0 for x in lambdas),
                f"Schmidt amplitudes must be nonnegative, got {lambdas}")
        total = math.fsum(x * x for x in lambdas)
        require(abs(total - 1.0) <= NUMERICS.norm_tol,
                f"Schmidt amplitudes are not normalized: sum of squares {total!r}")
        require(math.isfinite(self.phi), f"phase must be finite, got {self.phi}")
        phi = math.fmod(self.phi, 2 * math.pi) % (2 * math.pi)
        # tiny negative phases round up to 2pi
        object.__setattr__(self, "phi", 0.0 if phi >= 2 * math.pi else phi)

    @property
    def lambdas(self) -> tuple:
        return (self.lambda0, self.lambda1, self.lambda2, self.lambda3, self.lambda4)

    @classmethod
    def example(cls) -> "SchmidtParams":
        """The worked-example parameters lambda0 = lambda3 = 1/2, lambda2 = sqrt(2)/2"""
        return cls(0.5, 0.0, math.sqrt(2) / 2, 0.5, 0.0, 0.0)
