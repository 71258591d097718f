"""
Spearman rank correlation with mid-rank ties.
Exact permutation p-value for small samples, t-approximation above that.
"""

import itertools
import logging
import math
from typing import List, Mapping, Optional, Sequence, Tuple

import numpy as np
from scipy import stats

from ..config.constants import SPEARMAN_EXACT_MAX_N
from ..errors import LengthMismatch, TooFewPoints
from .models import SpearmanResult

logger = logging.getLogger(__name__)

# Permutations whose |rho| is within this of the observed one count as "as extreme"
_EXACT_TOLERANCE = 1e-12


def spearman(
    xs: Sequence[float],
    ys: Sequence[float],
    labels: Optional[Sequence[str]] = None,
) -> SpearmanResult:
    """Spearman's rho and its two-sided p-value.

    rho is the Pearson correlation of average ranks. With zero rank variance
    on either side the correlation is undefined and reported as rho 0, p 1.

    Args:
        xs: first sample
        ys: second sample, paired with xs
        labels: optional names of the paired observations

    Returns:
        SpearmanResult

    Raises:
        LengthMismatch: xs and ys differ in length
        TooFewPoints: fewer than 3 pairs
    """
    if len(xs) != len(ys):
        raise LengthMismatch(f"spearman needs paired samples, got {len(xs)} and {len(ys)}")
    n = len(xs)
    if n < 3:
        raise TooFewPoints(f"spearman needs at least 3 pairs, got {n}")

    rank_x = stats.rankdata(np.asarray(xs, dtype=float), method="average")
    rank_y = stats.rankdata(np.asarray(ys, dtype=float), method="average")
    dx = rank_x - rank_x.mean()
    dy = rank_y - rank_y.mean()
    denominator = math.sqrt(float(np.dot(dx, dx)) * float(np.dot(dy, dy)))

    method = "exact" if n <= SPEARMAN_EXACT_MAX_N else "t"
    if denominator == 0.0:
        logger.warning("Spearman correlation undefined for constant input; reporting rho=0")
        rho, p_value = 0.0, 1.0
    else:
        rho = _clamp(float(np.dot(dx, dy)) / denominator, -1.0, 1.0)
        if method == "exact":
            p_value = _exact_p_value(dx, dy, denominator, rho)
        else:
            p_value = _t_p_value(rho, n)

    return SpearmanResult(
        rho=rho,
        p_value=p_value,
        n=n,
        method=method,
        labels=list(labels) if labels is not None else [],
    )


def _exact_p_value(dx: np.ndarray, dy: np.ndarray, denominator: float, rho: float) -> float:
    """Share of all rank permutations at least as extreme as the observed rho."""
    permuted = np.array(list(itertools.permutations(dy)), dtype=float)
    rhos = permuted @ dx / denominator
    extreme = int(np.count_nonzero(np.abs(rhos) >= abs(rho) - _EXACT_TOLERANCE))
    return _clamp(extreme / len(permuted), 0.0, 1.0)


def _t_p_value(rho: float, n: int) -> float:
    """Two-sided p-value from t = rho * sqrt((n-2) / (1-rho^2))."""
    if abs(rho) >= 1.0:
        return 0.0
    t_stat = rho * math.sqrt((n - 2) / (1.0 - rho * rho))
    return _clamp(float(stats.t.sf(abs(t_stat), n - 2) * 2), 0.0, 1.0)


def _clamp(value: float, low: float, high: float) -> float:
    return max(low, min(high, value))


def paired_values(
    left: Mapping[str, float], right: Mapping[str, float]
) -> Tuple[List[str], List[float], List[float]]:
    """Keys present in both mappings (sorted) with their paired values."""
    keys = sorted(set(left) & set(right))
    return keys, [left[k] for k in keys], [right[k] for k in keys]
