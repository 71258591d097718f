"""
Latent Dirichlet allocation by collapsed Gibbs sampling.

The chain runs on integer count arrays (doc-topic, topic-word, topic totals)
driven by numpy's PCG64 generator, so a seed reproduces a model exactly on
every platform.
"""

import logging
from typing import List, Optional, Sequence

import numpy as np

from ..config.constants import (
    DEFAULT_LDA_ALPHA_NUMERATOR,
    DEFAULT_LDA_BETA,
    DEFAULT_LDA_ITERATIONS,
    DEFAULT_SEED,
)
from ..errors import BadHyperparam, EmptyCorpus
from ..ingest.models import Snapshot
from ..textvec import tokenize
from .models import TopicModel

logger = logging.getLogger(__name__)


def default_alpha(k: int) -> float:
    """50 / K."""
    return DEFAULT_LDA_ALPHA_NUMERATOR / k


def fit_lda(
    docs: Sequence[Sequence[str]],
    k: int,
    alpha: Optional[float] = None,
    beta: float = DEFAULT_LDA_BETA,
    iterations: int = DEFAULT_LDA_ITERATIONS,
    seed: int = DEFAULT_SEED,
) -> TopicModel:
    """Fit a K-topic model to tokenized documents.

    Args:
        docs: token sequences
        k: number of topics
        alpha: document-topic prior; None means 50 / K
        beta: topic-word prior
        iterations: full Gibbs sweeps over every token
        seed: PCG64 seed

    Returns:
        TopicModel with distributions estimated from the final counts

    Raises:
        BadHyperparam: k < 1, iterations < 1, alpha <= 0 or beta <= 0
        EmptyCorpus: docs hold no tokens
    """
    if k < 1:
        raise BadHyperparam(f"topic count must be at least 1, got {k}")
    if iterations < 1:
        raise BadHyperparam(f"iterations must be at least 1, got {iterations}")
    alpha = default_alpha(k) if alpha is None else alpha
    if alpha <= 0 or beta <= 0:
        raise BadHyperparam(f"alpha and beta must be positive, got alpha={alpha} beta={beta}")

    vocabulary = tuple(sorted({token for doc in docs for token in doc}))
    if not vocabulary:
        raise EmptyCorpus("topic modelling needs at least one token")
    term_ids = {term: i for i, term in enumerate(vocabulary)}
    words = [np.array([term_ids[token] for token in doc], dtype=np.int64) for doc in docs]
    n_docs, n_terms = len(words), len(vocabulary)

    rng = np.random.Generator(np.random.PCG64(seed))
    assignments = [rng.integers(0, k, size=len(doc), dtype=np.int64) for doc in words]

    doc_topic = np.zeros((n_docs, k), dtype=np.int64)
    topic_word = np.zeros((k, n_terms), dtype=np.int64)
    topic_total = np.zeros(k, dtype=np.int64)
    for d, (doc, z) in enumerate(zip(words, assignments)):
        np.add.at(doc_topic[d], z, 1)
        np.add.at(topic_word, (z, doc), 1)
        np.add.at(topic_total, z, 1)

    beta_total = n_terms * beta
    for _ in range(iterations):
        for d, (doc, z) in enumerate(zip(words, assignments)):
            for i, w in enumerate(doc):
                old = z[i]
                doc_topic[d, old] -= 1
                topic_word[old, w] -= 1
                topic_total[old] -= 1

                weights = (
                    (topic_word[:, w] + beta) / (topic_total + beta_total) * (doc_topic[d] + alpha)
                )
                cumulative = np.cumsum(weights)
                new = int(np.searchsorted(cumulative, rng.random() * cumulative[-1], side="right"))
                new = min(new, k - 1)

                z[i] = new
                doc_topic[d, new] += 1
                topic_word[new, w] += 1
                topic_total[new] += 1

    phi = (topic_word + beta) / (topic_total[:, None] + beta_total)
    lengths = np.array([len(doc) for doc in words], dtype=float)
    theta = (doc_topic + alpha) / (lengths[:, None] + k * alpha)

    logger.info(
        f"Fitted LDA with K={k} over {n_docs} documents, {n_terms} terms, "
        f"{iterations} iterations (seed {seed})"
    )
    return TopicModel(
        topic_count=k,
        vocabulary=vocabulary,
        topic_word=phi,
        doc_topic=theta,
        assignments=tuple(assignments),
        seed=seed,
        alpha=alpha,
        beta=beta,
        iterations=iterations,
    )


def group_description_corpus(snapshot: Snapshot) -> List[List[str]]:
    """Tokenized group descriptions in group order, empty ones dropped."""
    corpus = [tokenize(group.description) for group in snapshot.groups]
    return [tokens for tokens in corpus if tokens]
