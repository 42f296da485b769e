"""
Figure data for the two worked examples

Both tables are computed through the measures and bounds packages from the
Schmidt-family parameters, never from hard-coded values.
"""

from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from ..validation import require
from ..qstate import SchmidtParams
from ..measures import FamilyCorrelations, family_correlations_concurrence, family_correlations_teoa2
from ..bounds import (
    CoeffParams,
    CorrelationVector,
    BaselineKind,
    monogamy_rhs_thm1,
    polygamy_rhs_thm2,
    baseline_rhs,
    correlation_power,
    monogamy_condition,
)
from .models import FigureTable, Direction

FIGURE1_DEFAULTS = {"k": 0.9, "delta": 2.0}
FIGURE2_DEFAULTS = {"k": 0.8, "delta": 2.0}


def make_grid(start: float, stop: float, step: float) -> List[float]:
    """Inclusive evenly spaced grid, rounded to 12 decimals so printed values stay clean"""
    require(step > 0, f"grid step must be > 0, got {step}")
    require(stop >= start, f"grid stop {stop} is below start {start}")
    count = int(round((stop - start) / step)) + 1
    return [float(x) for x in np.round(start + step * np.arange(count), 12)]


def _check_grid(grid: Sequence[float]) -> Tuple[float, ...]:
    grid = tuple(float(x) for x in grid)
    require(len(grid) > 0, "exponent grid must not be empty")
    require(all(a < b for a, b in zip(grid, grid[1:])), "exponent grid must be strictly increasing")
    return grid


def _example_vector(correlations: FamilyCorrelations) -> CorrelationVector:
    # pairwise values are ordered descending before they feed a bound
    return CorrelationVector(correlations.pairwise_sorted(), joint=correlations.q_joint)


def _rows(grid: Iterable[float], vector: CorrelationVector, p: CoeffParams, evaluate) -> tuple:
    joint = np.array([vector.joint])
    rows = []
    for exponent in grid:
        true_value = float(correlation_power(joint, exponent)[0])
        rows.append((
            exponent,
            true_value,
            evaluate(vector, exponent, p),
            baseline_rhs(vector, exponent, BaselineKind.HAMMING_DELTA1, p),
        ))
    return tuple(rows)


def figure1_data(alpha_grid: Sequence[float], k: float = 0.9, delta: float = 2.0,
                 params: Optional[SchmidtParams] = None) -> FigureTable:
    """(alpha, y0, y1, y2): concurrence C_A|BC^alpha, the Hamming bound at delta, the delta = 1 bound"""
    grid = _check_grid(alpha_grid)
    p = CoeffParams(k, delta, 2.0)
    require(grid[0] >= p.gamma, f"alpha grid must start at >= 2, got {grid[0]}")
    vector = _example_vector(family_correlations_concurrence(params or SchmidtParams.example()))
    if not monogamy_condition(vector, p).holds:
        logger.warning(f"fig1 example vector {vector.values} does not satisfy the decay condition for k={k}, delta={delta}")
    table = FigureTable("alpha", ("y0", "y1", "y2"), Direction.MONOGAMY,
                        _rows(grid, vector, p, monogamy_rhs_thm1))
    logger.debug(f"fig1 table with {len(table.rows)} rows")
    return table


def figure2_data(beta_grid: Sequence[float], k: float = 0.8, delta: float = 2.0,
                 params: Optional[SchmidtParams] = None) -> FigureTable:
    """(beta, z0, z1, z2): Tsallis-2 assistance T^beta, the Hamming bound at delta, the delta = 1 bound"""
    grid = _check_grid(beta_grid)
    p = CoeffParams(k, delta, 1.0)
    require(grid[0] >= 0 and grid[-1] <= p.gamma, f"beta grid must lie in [0, 1], got [{grid[0]}, {grid[-1]}]")
    vector = _example_vector(family_correlations_teoa2(params or SchmidtParams.example()))
    if not monogamy_condition(vector, p).holds:
        logger.warning(f"fig2 example vector {vector.values} does not satisfy the decay condition for k={k}, delta={delta}")
    table = FigureTable("beta", ("z0", "z1", "z2"), Direction.POLYGAMY,
                        _rows(grid, vector, p, polygamy_rhs_thm2))
    logger.debug(f"fig2 table with {len(table.rows)} rows")
    return table
