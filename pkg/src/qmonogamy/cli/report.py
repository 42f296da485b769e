"""
CSV and JSON report writers
"""

import json
import os
import sys
import tempfile
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

import numpy as np
import pandas as pd
from loguru import logger

from ..error_handler import ReportWriteError
from ..verify import BoundReport
from .config import OutputFormat

REPORT_COLUMNS = [
    "sample_index", "exponent", "lhs", "rhs_thm", "rhs_cor",
    "rhs_plain", "rhs_delta1", "condition_holds", "slack",
]


def _to_builtin(value: Any) -> Any:
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, Path):
        return str(value)
    raise TypeError(f"cannot serialize {type(value).__name__}")


def render_records(records: Sequence[Dict[str, Any]], columns: Sequence[str], fmt: OutputFormat,
                   config: Optional[Dict[str, Any]] = None,
                   summary: Optional[Dict[str, Any]] = None) -> str:
    """Serialize flat records; floats use their shortest round-trip representation"""
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.CSV:
        frame = pd.DataFrame.from_records(list(records), columns=list(columns))
        return frame.to_csv(index=False, lineterminator="\n", na_rep="")
    document: Dict[str, Any] = {"config": config or {}, "results": [dict(r) for r in records]}
    if summary is not None:
        document["summary"] = summary
    return json.dumps(document, indent=2, default=_to_builtin) + "\n"


def write_atomic(text: str, path: Optional[Union[str, Path]]) -> None:
    """Write text to path via a sibling temporary file and os.replace; None writes to stdout"""
    if path is None:
        sys.stdout.write(text)
        return
    path = Path(path)
    tmp_name = None
    try:
        with tempfile.NamedTemporaryFile("w", encoding="utf-8", newline="\n", dir=path.parent,
                                         prefix=f".{path.name}.", suffix=".tmp", delete=False) as f:
            tmp_name = f.name
            f.write(text)
        os.replace(tmp_name, path)
    except OSError as e:
        if tmp_name and os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise ReportWriteError(f"cannot write {path}: {e}") from e
    logger.info(f"Wrote {path}")


def emit_report(reports: List[BoundReport], fmt: OutputFormat, path: Optional[Union[str, Path]],
                config: Optional[Dict[str, Any]] = None, summary: Optional[Dict[str, Any]] = None) -> None:
    """One row per (sample, exponent) report"""
    records = [report.row() for report in reports]
    write_atomic(render_records(records, REPORT_COLUMNS, fmt, config, summary), path)
