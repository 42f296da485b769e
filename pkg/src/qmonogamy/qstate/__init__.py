"""
Few-qubit pure states, density matrices and reductions
"""

from .models import PureState, DensityMatrix, SchmidtParams
from .operations import (
    schmidt_state,
    basis_state,
    tensor,
    density_of,
    density_tensor,
    partial_trace,
    haar_random_state,
    purity,
    spectrum,
    random_local_unitary,
    conjugate,
    schmidt_coefficients,
)

__all__ = [
    'PureState', 'DensityMatrix', 'SchmidtParams',
    'schmidt_state', 'basis_state', 'tensor', 'density_of', 'density_tensor',
    'partial_trace', 'haar_random_state', 'purity', 'spectrum',
    'random_local_unitary', 'conjugate', 'schmidt_coefficients',
]
