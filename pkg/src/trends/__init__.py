"""
Adoption trends across versions and Spearman correlation.
"""

from .models import SpearmanResult, TrendPoint, TrendSummary
from .series import summarize_trends, trend_point, trend_series
from .correlation import paired_values, spearman
from .popularity import (
    load_popularity,
    popularity_correlation,
    read_keyed_columns,
    read_keyed_scores,
)

__all__ = [
    "SpearmanResult",
    "TrendPoint",
    "TrendSummary",
    "summarize_trends",
    "trend_point",
    "trend_series",
    "paired_values",
    "spearman",
    "load_popularity",
    "popularity_correlation",
    "read_keyed_columns",
    "read_keyed_scores",
]
