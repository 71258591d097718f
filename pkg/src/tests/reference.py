"""
Naive reference computations shared by the scoring, keyword, topic and command-line tests.
"""

import itertools
import math
from collections import deque

import numpy as np

from ..config.constants import RequirementLevel
from ..textvec import tokenize

SCORE_FIELDS = ("com", "rel", "ndif", "ddif", "pdif", "dif", "dist", "gvalue")

M, D, O = RequirementLevel.MANDATORY, RequirementLevel.DEFAULT, RequirementLevel.OPTIONAL


def naive_scores(snapshot):
    """Every report field recomputed from first principles, keyed by group id.

    Term-keyed TF-IDF with ln(N/df) over group then package descriptions,
    BFS hop counts, a dynamic-programming edit distance, weighted Jaccard
    and the sample deviation of group sizes.
    """
    weights = {M: 0.8, D: 0.5, O: 0.2}
    docs = [tokenize(g.description) for g in sorted(snapshot.groups, key=lambda g: g.id)]
    docs += [tokenize(p.description) for p in sorted(snapshot.packages, key=lambda p: p.name)]
    df = {}
    for doc in docs:
        for term in set(doc):
            df[term] = df.get(term, 0) + 1

    def vector(text):
        counts = {}
        for term in tokenize(text):
            counts[term] = counts.get(term, 0) + 1
        return {t: c * math.log(len(docs) / df[t]) for t, c in counts.items() if t in df}

    def cosine(a, b):
        dot = sum(w * b[t] for t, w in a.items() if t in b)
        norm_a = math.sqrt(sum(w * w for w in a.values()))
        norm_b = math.sqrt(sum(w * w for w in b.values()))
        if norm_a == 0 or norm_b == 0:
            return 0.0
        return dot / (norm_a * norm_b)

    providers = {}
    for package in snapshot.packages:
        for capability in [package.name] + package.provides:
            providers.setdefault(capability, set()).add(package.name)
    neighbors = {package.name: set() for package in snapshot.packages}
    for package in snapshot.packages:
        for capability in package.requires:
            for target in providers.get(capability, ()):
                if target != package.name:
                    neighbors[package.name].add(target)
                    neighbors[target].add(package.name)

    def hops(a, b):
        seen = {a: 0}
        queue = deque([a])
        while queue:
            node = queue.popleft()
            for other in neighbors[node]:
                if other not in seen:
                    seen[other] = seen[node] + 1
                    queue.append(other)
        return seen.get(b)

    def levenshtein(a, b):
        row = list(range(len(b) + 1))
        for i, ca in enumerate(a, 1):
            previous, row[0] = row[0], i
            for j, cb in enumerate(b, 1):
                previous, row[j] = row[j], min(row[j] + 1, row[j - 1] + 1, previous + (ca != cb))
        return row[-1]

    def jaccard(a, b):
        union = set(a) | set(b)
        if not union:
            return 1.0
        shared = sum(min(weights[a[n]], weights[b[n]]) for n in set(a) & set(b))
        total = sum(max(weights.get(a.get(n), 0.0), weights.get(b.get(n), 0.0)) for n in union)
        return shared / total

    universe = snapshot.package_map()
    sizes = [group.size for group in snapshot.groups]
    mean = sum(sizes) / len(sizes)
    sigma = 0.0
    if len(sizes) >= 2:
        sigma = math.sqrt(sum((s - mean) ** 2 for s in sizes) / (len(sizes) - 1))

    results = {}
    for group in snapshot.groups:
        names = group.package_names()
        m = len(names)
        total = 0.0
        for a, b in itertools.permutations(names, 2):
            if a in universe and b in universe:
                distance = hops(a, b)
                degree = 1.0 / distance if distance else 0.0
                similarity = cosine(
                    vector(universe[a].description), vector(universe[b].description)
                )
                total += max(similarity, degree)
        com = total / (m * (m - 1)) if m > 1 else 0.0

        own = vector(group.description)
        rel = 0.0
        if m:
            rel = sum(
                max(cosine(own, vector(universe[n].description)), 0.0) if n in universe else 0.0
                for n in names
            ) / m

        row = {"com": com, "rel": rel, "ndif": None, "ddif": None, "pdif": None, "dif": None}
        others = [other for other in snapshot.groups if other.id != group.id]
        if others:
            row["ndif"] = sum(
                levenshtein(group.name, o.name) / max(len(group.name), len(o.name))
                if max(len(group.name), len(o.name)) else 0.0
                for o in others
            ) / len(others)
            row["ddif"] = sum(
                1 - (cosine(own, vector(o.description)) + 1) / 2 for o in others
            ) / len(others)
            row["pdif"] = sum(
                1 - jaccard(group.weights(), o.weights()) for o in others
            ) / len(others)
            row["dif"] = (row["ndif"] + row["ddif"] + row["pdif"]) / 3
        row["dist"] = 1 if mean - 2 * sigma <= m <= mean + 2 * sigma else 0
        parts = [com, rel, row["dist"]] + ([row["dif"]] if others else [])
        row["gvalue"] = sum(parts) / len(parts)
        results[group.id] = row
    return results



def assert_reports_match(reports, snapshot, tolerance=1e-9):
    """Every field of every report equals the naive value within ``tolerance``."""
    expected = naive_scores(snapshot)
    assert sorted(_field(r, "group_id") for r in reports) == sorted(expected)
    for report in reports:
        for field in SCORE_FIELDS:
            value, reference = _field(report, field), expected[_field(report, "group_id")][field]
            if reference is None:
                assert value is None, (_field(report, "group_id"), field)
            else:
                assert abs(value - reference) < tolerance, (field, value, reference)


def _field(report, name):
    return report[name] if isinstance(report, dict) else getattr(report, name)


def naive_keyword_contrast(grouped_docs, ungrouped_docs, k):
    """Keyword contrast recomputed with term counts and ln(N/df), as a plain dict."""
    docs = list(grouped_docs) + list(ungrouped_docs)
    df = {}
    for doc in docs:
        for term in set(doc):
            df[term] = df.get(term, 0) + 1

    def ranked(side):
        scores = {}
        for doc in side:
            for term in sorted(set(doc)):
                scores[term] = scores.get(term, 0.0) + doc.count(term) * math.log(len(docs) / df[term])
        kept = [(term, score) for term, score in scores.items() if score > 0.0]
        return sorted(kept, key=lambda item: (-item[1], item[0]))[:k]

    grouped, ungrouped = ranked(grouped_docs), ranked(ungrouped_docs)
    grouped_terms = {term for term, _ in grouped}
    ungrouped_terms = {term for term, _ in ungrouped}
    return {
        "grouped": [{"term": t, "score": s} for t, s in grouped],
        "ungrouped": [{"term": t, "score": s} for t, s in ungrouped],
        "grouped_only": [t for t, _ in grouped if t not in ungrouped_terms],
        "ungrouped_only": [t for t, _ in ungrouped if t not in grouped_terms],
    }


def naive_top_keywords(doc, docs, k):
    """Top ``k`` terms of one document by count times ln(N/df) over ``docs``."""
    scores = []
    for term in set(doc):
        df = sum(1 for other in docs if term in other)
        score = doc.count(term) * math.log(len(docs) / df) if df else 0.0
        if score > 0.0:
            scores.append((term, score))
    return sorted(scores, key=lambda item: (-item[1], item[0]))[:k]


def replay_gibbs(docs, k, alpha, beta, iterations, seed):
    """Collapsed Gibbs chain on plain lists, drawing from the same PCG64 stream.

    Returns the topic-word rows as lists of (count + beta) / (total + V * beta).
    """
    vocabulary = sorted({token for doc in docs for token in doc})
    term_ids = {term: i for i, term in enumerate(vocabulary)}
    words = [[term_ids[token] for token in doc] for doc in docs]
    rng = np.random.Generator(np.random.PCG64(seed))
    assignments = [
        [int(t) for t in rng.integers(0, k, size=len(doc), dtype=np.int64)] for doc in words
    ]

    doc_topic = [[0] * k for _ in words]
    topic_word = [[0] * len(vocabulary) for _ in range(k)]
    topic_total = [0] * k
    for d, (doc, z) in enumerate(zip(words, assignments)):
        for w, t in zip(doc, z):
            doc_topic[d][t] += 1
            topic_word[t][w] += 1
            topic_total[t] += 1

    beta_total = len(vocabulary) * beta
    for _ in range(iterations):
        for d, (doc, z) in enumerate(zip(words, assignments)):
            for i, w in enumerate(doc):
                old = z[i]
                doc_topic[d][old] -= 1
                topic_word[old][w] -= 1
                topic_total[old] -= 1

                running, cumulative = 0.0, []
                for t in range(k):
                    running += (
                        (topic_word[t][w] + beta) / (topic_total[t] + beta_total)
                        * (doc_topic[d][t] + alpha)
                    )
                    cumulative.append(running)
                u = rng.random() * cumulative[-1]
                new = next((t for t, c in enumerate(cumulative) if c > u), k - 1)

                z[i] = new
                doc_topic[d][new] += 1
                topic_word[new][w] += 1
                topic_total[new] += 1

    return vocabulary, [
        [(count + beta) / (topic_total[t] + beta_total) for count in topic_word[t]]
        for t in range(k)
    ]
