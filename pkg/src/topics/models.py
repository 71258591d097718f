"""
Topic model state and topic report records.
"""

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
from pydantic import BaseModel, Field


@dataclass(frozen=True, eq=False)
class TopicModel:
    """A fitted LDA model.

    topic_word is K x V, doc_topic is D x K; both row-normalized.
    assignments holds one int array of topic ids per document.
    """
    topic_count: int
    vocabulary: Tuple[str, ...]
    topic_word: np.ndarray
    doc_topic: np.ndarray
    assignments: Tuple[np.ndarray, ...]
    seed: int
    alpha: float
    beta: float
    iterations: int

    def ranked_terms(self, topic: int) -> List[Tuple[str, float]]:
        """Every term of one topic by probability descending, ties by term."""
        row = self.topic_word[topic]
        order = sorted(range(len(self.vocabulary)), key=lambda i: (-row[i], self.vocabulary[i]))
        return [(self.vocabulary[i], float(row[i])) for i in order]


class TopicWord(BaseModel):
    term: str
    probability: float = Field(..., ge=0.0, le=1.0)


class TopicSummary(BaseModel):
    """Top words of one topic."""
    topic: int = Field(..., ge=0)
    words: List[TopicWord] = Field(default_factory=list)


class TopicOverlap(BaseModel):
    """Top words shared by two topics."""
    topic_a: int = Field(..., ge=0)
    topic_b: int = Field(..., ge=0)
    shared: List[str] = Field(default_factory=list)


class TopicScore(BaseModel):
    """Coherence of the model fitted with k topics."""
    k: int = Field(..., ge=1)
    coherence: float


class TopicScan(BaseModel):
    """Coherence per topic count and the selected count."""
    best_k: int = Field(..., ge=1)
    scores: List[TopicScore] = Field(default_factory=list)
    topics: List[TopicSummary] = Field(default_factory=list)
    overlaps: List[TopicOverlap] = Field(default_factory=list)
