"""
Closed-form and first-principles correlations of the generalized Schmidt family

The closed forms use the labeling C_AB = 2 l0 l2, C_AC = 2 l0 l3. The
first-principles reductions pair l0 with l3 in the Tr_C marginal, so the two
agree only as sorted pairs.
"""

import math
from typing import Optional

from ..qstate import SchmidtParams, schmidt_state, partial_trace
from .models import FamilyCorrelations, EoaConfig, AssistanceEstimate
from .concurrence import concurrence_pure, concurrence_wootters
from .tsallis import tsallis_entanglement_pure
from .assistance import teoa_oracle

# qubit labels of the family: A = 0, B = 1, C = 2
PAIR_AB = (0, 1)
PAIR_AC = (0, 2)


def family_correlations_concurrence(params: SchmidtParams) -> FamilyCorrelations:
    l0, _, l2, l3, l4 = params.lambdas
    return FamilyCorrelations(
        q_joint=2 * l0 * math.sqrt(l2 * l2 + l3 * l3 + l4 * l4),
        q_ab=2 * l0 * l2,
        q_ac=2 * l0 * l3,
    )


def family_correlations_teoa2(params: SchmidtParams) -> FamilyCorrelations:
    l0, _, l2, l3, l4 = params.lambdas
    return FamilyCorrelations(
        q_joint=2 * l0 ** 2 * (l2 ** 2 + l3 ** 2 + l4 ** 2),
        q_ab=2 * l0 ** 2 * (l2 ** 2 + l4 ** 2),
        q_ac=2 * l0 ** 2 * (l3 ** 2 + l4 ** 2),
    )


def numeric_correlations_concurrence(params: SchmidtParams) -> FamilyCorrelations:
    """Concurrences computed from the state: pure cut A|BC, Wootters on the marginals"""
    state = schmidt_state(params)
    return FamilyCorrelations(
        q_joint=concurrence_pure(state, [0]),
        q_ab=concurrence_wootters(partial_trace(state, 3, PAIR_AB)),
        q_ac=concurrence_wootters(partial_trace(state, 3, PAIR_AC)),
    )


def numeric_correlations_teoa2(params: SchmidtParams, config: Optional[EoaConfig] = None,
                               seed: int = 0) -> FamilyCorrelations:
    """Tsallis-2 assistance values from the oracle (lower bounds on the pairwise maxima)"""
    state = schmidt_state(params)
    ab: AssistanceEstimate = teoa_oracle(partial_trace(state, 3, PAIR_AB), 2.0, config, seed)
    ac: AssistanceEstimate = teoa_oracle(partial_trace(state, 3, PAIR_AC), 2.0, config, seed)
    return FamilyCorrelations(
        q_joint=tsallis_entanglement_pure(state, [0], 2.0),
        q_ab=ab.value,
        q_ac=ac.value,
    )
