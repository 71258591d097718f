"""
Embedding backends for description similarity.
The shipped backend is TF-IDF over a snapshot's own descriptions; other
providers plug in behind EmbeddingBackend and document their similarity range.
"""

from abc import ABC, abstractmethod
from typing import Any, Dict, List, Sequence, Tuple

from ..ingest.models import Snapshot
from .index import Vector, VectorIndex, build_index, cosine_similarity, embed
from .tokens import tokenize


class EmbeddingBackend(ABC):
    """Turns description text into vectors and compares them."""

    # Closed interval every similarity() result falls in
    similarity_range: Tuple[float, float] = (-1.0, 1.0)

    @abstractmethod
    def embed(self, text: str) -> Any:
        """Vector for one description."""

    @abstractmethod
    def similarity(self, u: Any, v: Any) -> float:
        """Similarity of two vectors returned by embed()."""

    def text_similarity(self, a: str, b: str) -> float:
        """Similarity of two descriptions."""
        return self.similarity(self.embed(a), self.embed(b))


class TfidfBackend(EmbeddingBackend):
    """Deterministic TF-IDF embeddings; similarities lie in [0, 1]."""

    similarity_range = (0.0, 1.0)

    def __init__(self, index: VectorIndex):
        self.index = index
        self._cache: Dict[str, Vector] = {}

    @classmethod
    def fit(cls, texts: Sequence[str]) -> "TfidfBackend":
        """Build the index from raw texts."""
        return cls(build_index([tokenize(text) for text in texts]))

    @classmethod
    def from_snapshot(cls, snapshot: Snapshot) -> "TfidfBackend":
        """Index every group and package description of a snapshot."""
        return cls(build_index(snapshot_corpus(snapshot)))

    def embed(self, text: str) -> Vector:
        cached = self._cache.get(text)
        if cached is None:
            cached = self._cache.setdefault(text, embed(self.index, tokenize(text)))
        return cached

    def similarity(self, u: Vector, v: Vector) -> float:
        return cosine_similarity(u, v)


def snapshot_corpus(snapshot: Snapshot) -> List[List[str]]:
    """Token sequences of all group descriptions followed by all package descriptions.

    Groups and packages are visited in id/name order so the corpus is the same
    however the snapshot lists them.
    """
    groups = sorted(snapshot.groups, key=lambda g: g.id)
    packages = sorted(snapshot.packages, key=lambda p: p.name)
    return [tokenize(g.description) for g in groups] + [tokenize(p.description) for p in packages]
