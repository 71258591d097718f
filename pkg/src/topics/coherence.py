"""
UMass topic coherence, topic-count selection and top-word reports.
"""

import itertools
import logging
import math
from collections import defaultdict
from typing import Dict, List, Optional, Sequence, Set, Tuple

from ..config.constants import (
    DEFAULT_LDA_BETA,
    DEFAULT_LDA_ITERATIONS,
    DEFAULT_LDA_TOP_N,
    DEFAULT_SEED,
)
from ..errors import BadHyperparam
from .lda import fit_lda
from .models import TopicModel, TopicOverlap, TopicScan, TopicScore, TopicSummary, TopicWord

logger = logging.getLogger(__name__)


def top_words(model: TopicModel, n: int) -> List[List[Tuple[str, float]]]:
    """The n most probable terms of every topic, ties broken by term."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return [model.ranked_terms(topic)[:n] for topic in range(model.topic_count)]


def coherence(
    model: TopicModel, docs: Sequence[Sequence[str]], top_n: int = DEFAULT_LDA_TOP_N
) -> float:
    """UMass coherence averaged over topics.

    Per topic, the sum over its top words of ln((D(wi, wj) + 1) / D(wj)) for
    every wi ranked below wj, where D counts documents containing the words.
    Pairs whose higher-ranked word occurs in no document are skipped.
    """
    if top_n < 1:
        raise ValueError("top_n must be at least 1")

    presence: Dict[str, Set[int]] = defaultdict(set)
    for d, doc in enumerate(docs):
        for term in set(doc):
            presence[term].add(d)

    per_topic = []
    for ranked in top_words(model, top_n):
        terms = [term for term, _ in ranked]
        total = []
        for j, i in itertools.combinations(range(len(terms)), 2):
            later, earlier = terms[i], terms[j]
            earlier_docs = presence.get(earlier, set())
            if not earlier_docs:
                continue
            joint = len(earlier_docs & presence.get(later, set()))
            total.append(math.log((joint + 1) / len(earlier_docs)))
        per_topic.append(math.fsum(total))
    return math.fsum(per_topic) / len(per_topic)


def topic_overlap(model: TopicModel, n: int) -> List[TopicOverlap]:
    """Top words shared by every pair of topics."""
    tops = [{term for term, _ in ranked} for ranked in top_words(model, n)]
    return [
        TopicOverlap(topic_a=a, topic_b=b, shared=sorted(tops[a] & tops[b]))
        for a, b in itertools.combinations(range(model.topic_count), 2)
    ]


def summarize_topics(model: TopicModel, n: int) -> List[TopicSummary]:
    """Top words with probabilities for every topic."""
    return [
        TopicSummary(
            topic=topic,
            words=[TopicWord(term=term, probability=p) for term, p in ranked],
        )
        for topic, ranked in enumerate(top_words(model, n))
    ]


def select_topic_count(
    docs: Sequence[Sequence[str]],
    k_min: int,
    k_max: int,
    alpha: Optional[float] = None,
    beta: float = DEFAULT_LDA_BETA,
    iterations: int = DEFAULT_LDA_ITERATIONS,
    seed: int = DEFAULT_SEED,
    top_n: int = DEFAULT_LDA_TOP_N,
) -> TopicScan:
    """Fit every K in [k_min, k_max] with the same seed and keep the most coherent.

    Ties go to the smaller K. The returned scan also carries the top words and
    pairwise overlaps of the selected model.

    Raises:
        BadHyperparam: k_min < 1 or k_min > k_max, plus anything fit_lda raises
    """
    if k_min < 1 or k_min > k_max:
        raise BadHyperparam(f"need 1 <= k_min <= k_max, got {k_min}..{k_max}")

    scores: List[TopicScore] = []
    chosen: Optional[TopicModel] = None
    best_score = -math.inf
    for k in range(k_min, k_max + 1):
        model = fit_lda(docs, k, alpha=alpha, beta=beta, iterations=iterations, seed=seed)
        score = coherence(model, docs, top_n)
        scores.append(TopicScore(k=k, coherence=score))
        logger.info(f"K={k}: coherence {score:.4f}")
        if chosen is None or score > best_score:
            chosen, best_score = model, score

    logger.info(f"Selected K={chosen.topic_count} from {k_min}..{k_max}")
    return TopicScan(
        best_k=chosen.topic_count,
        scores=scores,
        topics=summarize_topics(chosen, top_n),
        overlaps=topic_overlap(chosen, top_n),
    )
