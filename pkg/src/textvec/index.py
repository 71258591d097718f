"""
TF-IDF vector space over a fixed corpus.
Weights are tf * ln(|S| / df); natural log throughout.
"""

import math
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Mapping, Sequence

from ..errors import EmptyCorpus

# Sparse vector: dimension -> weight, zero weights never stored
Vector = Dict[int, float]


@dataclass(frozen=True)
class VectorIndex:
    """Vocabulary and document frequencies of a corpus."""
    vocabulary: Mapping[str, int]
    doc_frequencies: Mapping[str, int]
    corpus_size: int

    def idf(self, term: str) -> float:
        """ln(|S| / df), 0.0 for out-of-vocabulary terms."""
        df = self.doc_frequencies.get(term)
        if not df:
            return 0.0
        return math.log(self.corpus_size / df)


def build_index(docs: Sequence[Sequence[str]]) -> VectorIndex:
    """Index a corpus of token sequences.

    Dimensions are assigned in sorted term order so the index does not depend
    on document order.

    Raises:
        EmptyCorpus: docs is empty
    """
    if len(docs) == 0:
        raise EmptyCorpus("cannot build an index over zero documents")

    doc_frequencies: Counter = Counter()
    for doc in docs:
        doc_frequencies.update(set(doc))

    terms = sorted(doc_frequencies)
    return VectorIndex(
        vocabulary={term: position for position, term in enumerate(terms)},
        doc_frequencies={term: doc_frequencies[term] for term in terms},
        corpus_size=len(docs),
    )


def embed(index: VectorIndex, tokens: Sequence[str]) -> Vector:
    """TF-IDF vector of a token sequence; out-of-vocabulary terms are ignored."""
    counts = Counter(token for token in tokens if token in index.vocabulary)
    vector: Vector = {}
    for term in sorted(counts, key=index.vocabulary.__getitem__):
        weight = counts[term] * index.idf(term)
        if weight != 0.0:
            vector[index.vocabulary[term]] = weight
    return vector


def cosine_similarity(u: Mapping[int, float], v: Mapping[int, float]) -> float:
    """u.v / (|u||v|), 0.0 when either vector is zero."""
    norm_u = math.sqrt(math.fsum(w * w for w in u.values()))
    norm_v = math.sqrt(math.fsum(w * w for w in v.values()))
    if norm_u == 0.0 or norm_v == 0.0:
        return 0.0

    if len(v) < len(u):
        u, v = v, u
    dot = math.fsum(weight * v[dim] for dim, weight in u.items() if dim in v)
    return max(-1.0, min(1.0, dot / (norm_u * norm_v)))


def tfidf_relevance(word: str, doc: Sequence[str], index: VectorIndex) -> float:
    """f_{w,p} * ln(|S| / f_{w,S}); 0.0 for out-of-vocabulary words."""
    if word not in index.doc_frequencies:
        return 0.0
    frequency = sum(1 for token in doc if token == word)
    if frequency == 0:
        return 0.0
    return frequency * index.idf(word)
