"""
Keyword extraction by TF-IDF relevance, and grouped-vs-ungrouped keyword contrast.
"""

import logging
from collections import defaultdict
from typing import Dict, List, Sequence, Tuple

from pydantic import BaseModel, Field

from ..errors import EmptyCorpus
from .index import VectorIndex, build_index, tfidf_relevance

logger = logging.getLogger(__name__)


class KeywordScore(BaseModel):
    """A term and its relevance score."""
    term: str
    score: float


class KeywordContrast(BaseModel):
    """Top keywords of two description collections and the terms exclusive to each."""
    grouped: List[KeywordScore] = Field(default_factory=list)
    ungrouped: List[KeywordScore] = Field(default_factory=list)
    grouped_only: List[str] = Field(default_factory=list)
    ungrouped_only: List[str] = Field(default_factory=list)


def _rank(scores: Dict[str, float], k: int) -> List[Tuple[str, float]]:
    """Nonzero scores, descending, ties lexicographic ascending, at most k."""
    ranked = sorted(
        ((term, score) for term, score in scores.items() if score > 0.0),
        key=lambda item: (-item[1], item[0]),
    )
    return ranked[:k]


def top_keywords(doc: Sequence[str], index: VectorIndex, k: int) -> List[Tuple[str, float]]:
    """Most relevant terms of one document.

    Args:
        doc: token sequence
        index: corpus index the document is scored against
        k: maximum number of terms

    Returns:
        List of (term, score), zero-score terms excluded
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    scores = {term: tfidf_relevance(term, doc, index) for term in set(doc)}
    return _rank(scores, k)


def keyword_contrast(
    grouped_docs: Sequence[Sequence[str]],
    ungrouped_docs: Sequence[Sequence[str]],
    k: int,
) -> KeywordContrast:
    """Compare aggregate keywords of two collections scored over their union.

    Raises:
        EmptyCorpus: either collection is empty
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if len(grouped_docs) == 0 or len(ungrouped_docs) == 0:
        raise EmptyCorpus("keyword contrast needs documents on both sides")

    index = build_index(list(grouped_docs) + list(ungrouped_docs))
    grouped = _rank(_aggregate(grouped_docs, index), k)
    ungrouped = _rank(_aggregate(ungrouped_docs, index), k)

    grouped_terms = {term for term, _ in grouped}
    ungrouped_terms = {term for term, _ in ungrouped}
    logger.info(
        f"Keyword contrast over {len(grouped_docs)} grouped and "
        f"{len(ungrouped_docs)} ungrouped descriptions"
    )
    return KeywordContrast(
        grouped=[KeywordScore(term=t, score=s) for t, s in grouped],
        ungrouped=[KeywordScore(term=t, score=s) for t, s in ungrouped],
        grouped_only=[t for t, _ in grouped if t not in ungrouped_terms],
        ungrouped_only=[t for t, _ in ungrouped if t not in grouped_terms],
    )


def _aggregate(docs: Sequence[Sequence[str]], index: VectorIndex) -> Dict[str, float]:
    """Sum of per-document relevance for every term in the collection."""
    totals: Dict[str, float] = defaultdict(float)
    for doc in docs:
        for term in set(doc):
            totals[term] += tfidf_relevance(term, doc, index)
    return dict(totals)
