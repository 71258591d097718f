"""
Popularity input (name,stars CSV) and its correlation with group adoption.
"""

import logging
from pathlib import Path
from typing import Dict, Mapping, Sequence, Union

import pandas as pd

from ..errors import IoError, SchemaViolation
from .correlation import paired_values, spearman
from .models import SpearmanResult

logger = logging.getLogger(__name__)


def read_keyed_scores(path: Union[str, Path], key: str, value: str) -> Dict[str, float]:
    """Read a two-column CSV into a key -> numeric value mapping.

    Later rows win over earlier rows with the same key.

    Raises:
        IoError: the file cannot be read
        SchemaViolation: a column is missing, a key is empty or a value is not numeric
    """
    return read_keyed_columns(path, key, [value])[value]


def read_keyed_columns(
    path: Union[str, Path],
    key: str,
    required: Sequence[str],
    optional: Sequence[str] = (),
) -> Dict[str, Dict[str, float]]:
    """Read numeric columns of a CSV, each as a key -> value mapping.

    Optional columns absent from the header are left out of the result.
    Later rows win over earlier rows with the same key.

    Raises:
        IoError: the file cannot be read
        SchemaViolation: a required column is missing, a key is empty or a value is not numeric
    """
    try:
        frame = pd.read_csv(path, dtype={key: str}, skipinitialspace=True)
    except OSError as e:
        raise IoError(path, str(e)) from e
    except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as e:
        raise SchemaViolation(f"{path}: unreadable CSV: {e}") from e

    missing = [column for column in (key, *required) if column not in frame.columns]
    if missing:
        raise SchemaViolation(f"{path}: missing column(s) {', '.join(missing)}")
    columns = [*required, *(c for c in optional if c in frame.columns and c not in required)]

    duplicated = frame[key][frame[key].duplicated()].dropna().unique().tolist()
    for name in duplicated:
        logger.warning(f"{path}: duplicate {key} '{name}', keeping the last one")

    result: Dict[str, Dict[str, float]] = {}
    for column in columns:
        values = pd.to_numeric(frame[column], errors="coerce")
        bad_rows = frame.index[values.isna() | frame[key].isna()].tolist()
        if bad_rows:
            raise SchemaViolation(
                f"{path}: empty {key} or non-numeric {column} on row(s) {bad_rows}"
            )
        result[column] = {name: float(number) for name, number in zip(frame[key], values)}
    logger.info(f"Loaded {len(frame)} rows with column(s) {', '.join(columns)} from {path}")
    return result


def load_popularity(path: Union[str, Path]) -> Dict[str, float]:
    """Read a `name,stars` CSV into a distribution -> stars mapping."""
    return read_keyed_scores(path, "name", "stars")


def popularity_correlation(
    ratios: Mapping[str, float], stars: Mapping[str, float]
) -> SpearmanResult:
    """Spearman correlation between adoption ratio and stars per distribution.

    Only distributions present in both inputs are paired.
    """
    names, xs, ys = paired_values(ratios, stars)
    skipped = len(set(ratios) ^ set(stars))
    if skipped:
        logger.warning(f"{skipped} distribution(s) lack either a ratio or a star count")
    return spearman(xs, ys, labels=names)
