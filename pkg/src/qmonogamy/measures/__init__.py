"""
Bipartite correlation measures
"""

from .models import FamilyCorrelations, EoaConfig, AssistanceEstimate
from .concurrence import concurrence_pure, concurrence_wootters
from .tsallis import tsallis_entropy, tsallis_entanglement_pure
from .assistance import teoa_oracle, ensemble_value, eigen_ensemble, explicit_ensemble
from .family import (
    family_correlations_concurrence,
    family_correlations_teoa2,
    numeric_correlations_concurrence,
    numeric_correlations_teoa2,
)

__all__ = [
    'FamilyCorrelations', 'EoaConfig', 'AssistanceEstimate',
    'concurrence_pure', 'concurrence_wootters',
    'tsallis_entropy', 'tsallis_entanglement_pure',
    'teoa_oracle', 'ensemble_value', 'eigen_ensemble', 'explicit_ensemble',
    'family_correlations_concurrence', 'family_correlations_teoa2',
    'numeric_correlations_concurrence', 'numeric_correlations_teoa2',
]
