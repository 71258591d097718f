"""
Topic modelling over group descriptions.
"""

from .models import TopicModel, TopicOverlap, TopicScan, TopicScore, TopicSummary, TopicWord
from .lda import default_alpha, fit_lda, group_description_corpus
from .coherence import coherence, select_topic_count, summarize_topics, top_words, topic_overlap

__all__ = [
    "TopicModel",
    "TopicOverlap",
    "TopicScan",
    "TopicScore",
    "TopicSummary",
    "TopicWord",
    "default_alpha",
    "fit_lda",
    "group_description_corpus",
    "coherence",
    "select_topic_count",
    "summarize_topics",
    "top_words",
    "topic_overlap",
]
