"""
Grid check of the two scalar lemma inequalities
"""

from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Sequence

import numpy as np
from loguru import logger

from ..config import NUMERICS
from ..error_handler import ViolationHandler
from ..bounds import CoeffParams, lemma_lower_slack, lemma_upper_slack

DEFAULT_LEMMA_GRID: Dict[str, Sequence[float]] = {
    "k": tuple(float(x) for x in np.round(np.arange(1, 11) / 10, 12)),
    "delta": (1.0, 1.5, 2.0, 3.0),
    "t_fractions": (0.0, 0.25, 0.5, 0.75, 1.0),
    "x": (1.0, 1.5, 2.0, 3.0, 5.0),
    "y": (0.0, 0.25, 0.5, 0.75, 1.0),
}


@dataclass(frozen=True)
class LemmaRow:
    inequality: str
    k: float
    delta: float
    t: float
    exponent: float
    slack: float
    boundary: bool = False


def lemma_grid_check(grid: Optional[Dict[str, Sequence[float]]] = None,
                     handler: Optional[ViolationHandler] = None) -> List[LemmaRow]:
    """Evaluate both lemma slacks over the grid and record negatives and broken boundary equalities"""
    grid = {**DEFAULT_LEMMA_GRID, **(grid or {})}
    handler = handler or ViolationHandler()
    tolerance = NUMERICS.slack_tol_arith
    before = len(handler.violations)
    rows: List[LemmaRow] = []
    for k, delta in product(grid["k"], grid["delta"]):
        p = CoeffParams(k, delta, 1.0)
        # the top fraction is pinned to k^delta itself so the boundary is hit exactly
        for f in grid["t_fractions"]:
            t = p.k_delta if f == 1.0 else f * p.k_delta
            edge = f in (0.0, 1.0)
            rows.extend(LemmaRow("lower", k, delta, t, x, lemma_lower_slack(t, x, p), edge) for x in grid["x"])
            rows.extend(LemmaRow("upper", k, delta, t, y, lemma_upper_slack(t, y, p), edge) for y in grid["y"])

    for row in rows:
        details = {"k": row.k, "delta": row.delta, "t": row.t, "exponent": row.exponent, "slack": row.slack}
        if row.slack < -tolerance:
            handler.record("lemma", "lemma_grid_check", f"{row.inequality} lemma slack {row.slack:.3e}", details)
        elif row.boundary and abs(row.slack) > tolerance:
            handler.record("lemma", "lemma_grid_check", f"{row.inequality} lemma not tight at boundary", details)
    logger.info(f"Lemma grid: {len(rows)} evaluations, {len(handler.violations) - before} violations")
    return rows
