"""
Hamming-weight monogamy and polygamy bounds
"""

from .models import CoeffParams, CorrelationVector, ConditionReport, as_vector
from .hamming import (
    hamming_weight,
    hamming_weights,
    coeff_K,
    lemma_coeff,
    lemma_lower_slack,
    lemma_upper_slack,
)
from .conditions import (
    monogamy_condition,
    tail_condition,
    mixed_condition,
    admissible_splits,
    alpha_half_condition,
)
from .evaluators import (
    Weighting,
    BaselineKind,
    correlation_power,
    zero_power_triggered,
    term_contributions,
    monogamy_rhs_thm1,
    monogamy_rhs_cor1,
    polygamy_rhs_thm2,
    polygamy_rhs_cor2,
    polygamy_rhs_cor3,
    baseline_rhs,
    algebraic_monogamy_slack,
    algebraic_polygamy_slack,
)

__all__ = [
    'CoeffParams', 'CorrelationVector', 'ConditionReport', 'as_vector',
    'hamming_weight', 'hamming_weights', 'coeff_K', 'lemma_coeff',
    'lemma_lower_slack', 'lemma_upper_slack',
    'monogamy_condition', 'tail_condition', 'mixed_condition',
    'admissible_splits', 'alpha_half_condition',
    'Weighting', 'BaselineKind', 'correlation_power', 'zero_power_triggered',
    'term_contributions', 'monogamy_rhs_thm1', 'monogamy_rhs_cor1',
    'polygamy_rhs_thm2', 'polygamy_rhs_cor2', 'polygamy_rhs_cor3',
    'baseline_rhs', 'algebraic_monogamy_slack', 'algebraic_polygamy_slack',
]
