"""
(k, delta) scan for the tightest admissible bound on a fixed vector
"""

from itertools import product
from typing import List, Sequence

from loguru import logger

from ..error_handler import InvalidInputError
from ..bounds import CoeffParams, CorrelationVector, monogamy_condition, monogamy_rhs_thm1, polygamy_rhs_thm2
from .models import Direction, ScanRow


def coefficient_scan(v: CorrelationVector, exponent: float, direction: Direction,
                     k_grid: Sequence[float], delta_grid: Sequence[float], gamma: float) -> List[ScanRow]:
    """Theorem RHS at every grid point; the tightest condition-satisfying row is flagged"""
    direction = Direction(direction)
    evaluate = monogamy_rhs_thm1 if direction is Direction.MONOGAMY else polygamy_rhs_thm2
    rows = []
    for k, delta in product(k_grid, delta_grid):
        p = CoeffParams(float(k), float(delta), gamma)
        rows.append(ScanRow(p.k, p.delta, monogamy_condition(v, p).holds, evaluate(v, exponent, p)))
    if not rows:
        raise InvalidInputError("scan grids must not be empty")

    admissible = [i for i, row in enumerate(rows) if row.condition_holds]
    if not admissible:
        logger.warning(f"No (k, delta) on the grid satisfies the decay condition for {v.values}")
        return rows
    pick = max if direction is Direction.MONOGAMY else min
    best = pick(admissible, key=lambda i: rows[i].rhs)
    best_row = rows[best]
    rows[best] = ScanRow(best_row.k, best_row.delta, True, best_row.rhs, tightest=True)
    logger.info(f"Tightest admissible bound {best_row.rhs:.12g} at k={best_row.k}, delta={best_row.delta}")
    return rows
