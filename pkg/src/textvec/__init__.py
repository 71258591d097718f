"""
Text vectorization: tokenizer, TF-IDF index, cosine similarity, keywords, edit distance.
"""

from .stopwords import STOPWORDS
from .tokens import tokenize
from .index import Vector, VectorIndex, build_index, cosine_similarity, embed, tfidf_relevance
from .keywords import KeywordContrast, KeywordScore, keyword_contrast, top_keywords
from .distance import edit_distance
from .backends import EmbeddingBackend, TfidfBackend, snapshot_corpus

__all__ = [
    "STOPWORDS",
    "tokenize",
    "Vector",
    "VectorIndex",
    "build_index",
    "cosine_similarity",
    "embed",
    "tfidf_relevance",
    "KeywordContrast",
    "KeywordScore",
    "keyword_contrast",
    "top_keywords",
    "edit_distance",
    "EmbeddingBackend",
    "TfidfBackend",
    "snapshot_corpus",
]
