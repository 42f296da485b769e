"""
End-to-end verification: sweeps, figure data, scans and the padding check
"""

from .models import BoundReport, SweepResult, FigureTable, ScanRow, PaddingReport, Direction
from .config import SweepConfig, SweepMode, Measure, Sampler, MEASURE_GAMMA
from .figures import figure1_data, figure2_data, make_grid, FIGURE1_DEFAULTS, FIGURE2_DEFAULTS
from .lemmas import lemma_grid_check, LemmaRow, DEFAULT_LEMMA_GRID
from .padding import padding_check
from .scan import coefficient_scan
from .sweeps import (
    build_report,
    check_report,
    evaluate_state,
    evaluate_family,
    sample_vector,
    sample_schmidt_params,
    family_residual,
    sweep_random_states,
    sweep_random_vectors,
    family_sweep,
)

__all__ = [
    'BoundReport', 'SweepResult', 'FigureTable', 'ScanRow', 'PaddingReport', 'Direction',
    'SweepConfig', 'SweepMode', 'Measure', 'Sampler', 'MEASURE_GAMMA',
    'figure1_data', 'figure2_data', 'make_grid', 'FIGURE1_DEFAULTS', 'FIGURE2_DEFAULTS',
    'lemma_grid_check', 'LemmaRow', 'DEFAULT_LEMMA_GRID', 'padding_check', 'coefficient_scan',
    'build_report', 'check_report', 'evaluate_state', 'evaluate_family',
    'sample_vector', 'sample_schmidt_params', 'family_residual',
    'sweep_random_states', 'sweep_random_vectors', 'family_sweep',
]
