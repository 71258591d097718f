"""
Report rendering: canonical JSON and fixed-column CSV.
"""

import json
import logging
import sys
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence, Union

import pandas as pd
from pydantic import BaseModel

from ..config.constants import (
    CSV_FLOAT_FORMAT,
    FLOW_CSV_COLUMNS,
    SCORE_CSV_COLUMNS,
    TREND_CSV_COLUMNS,
)
from ..errors import IoError
from ..evolution import FlowReport
from ..gvalue import GValueReport
from ..trends import TrendPoint

logger = logging.getLogger(__name__)

FLAG_SEPARATOR = ";"


def to_plain(value: Any) -> Any:
    """Pydantic models (nested anywhere) to JSON-ready builtins."""
    if isinstance(value, BaseModel):
        return value.model_dump(mode="json")
    if isinstance(value, dict):
        return {key: to_plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_plain(item) for item in value]
    return value


def render_json(value: Any) -> str:
    """Indented JSON with keys in declaration order and a trailing newline."""
    return json.dumps(to_plain(value), indent=2, ensure_ascii=False) + "\n"


def _render_csv(rows: Iterable[dict], columns: Sequence[str]) -> str:
    frame = pd.DataFrame(list(rows), columns=list(columns))
    return frame.to_csv(index=False, float_format=CSV_FLOAT_FORMAT, na_rep="", lineterminator="\n")


def scores_csv(reports: Sequence[GValueReport]) -> str:
    """One row per group; flags joined by ';', absent differentiation left empty."""
    rows = []
    for report in reports:
        row = report.model_dump(mode="json")
        row["flags"] = FLAG_SEPARATOR.join(row["flags"])
        rows.append(row)
    return _render_csv(rows, SCORE_CSV_COLUMNS)


def flows_csv(reports: Sequence[FlowReport]) -> str:
    """One row per version pair."""
    return _render_csv((report.model_dump() for report in reports), FLOW_CSV_COLUMNS)


def trends_csv(points: Sequence[TrendPoint]) -> str:
    """One row per version."""
    rows = (
        {
            "version": point.version,
            "groups": point.group_count,
            "p2g_packages": point.p2g_package_count,
            "total_packages": point.total_package_count,
            "ratio": point.ratio,
        }
        for point in points
    )
    return _render_csv(rows, TREND_CSV_COLUMNS)


def write_output(text: str, path: Optional[Union[str, Path]] = None) -> None:
    """Write a rendered report to path, or to standard output when path is None.

    Raises:
        IoError: path cannot be written
    """
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    try:
        Path(path).write_bytes(text.encode("utf-8"))
    except OSError as e:
        raise IoError(path, e.strerror or str(e)) from e
    logger.info(f"Wrote {len(text)} characters to {path}")
