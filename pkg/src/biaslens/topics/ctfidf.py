"""Class-based TF-IDF over concatenated per-topic documents.

For term t in topic c:

    W(t, c) = tf(t, c) * ln(1 + A / f(t))

where tf(t, c) counts t in the topic's concatenated documents, f(t) counts t
across all topics, and A is the average total term count per topic. All
weights are nonnegative because the log factor is always positive.
"""

from __future__ import annotations

import logging
import math
from collections import Counter

log = logging.getLogger(__name__)


def class_term_counts(docs_by_topic: dict[int, list[list[str]]]) -> dict[int, Counter]:
    return {
        topic: Counter(tok for doc in docs for tok in doc)
        for topic, docs in docs_by_topic.items()
    }


def ctfidf_weights(
    tf_by_topic: dict[int, Counter],
) -> dict[int, dict[str, float]]:
    """Weight each topic's terms given per-topic term counts."""
    topics = sorted(tf_by_topic)
    if not topics:
        return {}
    f: Counter = Counter()
    for tf in tf_by_topic.values():
        f.update(tf)
    # empty classes carry no terms; they do not dilute the per-topic average
    nonempty = [t for t in topics if tf_by_topic[t]]
    if not nonempty:
        return {t: {} for t in topics}
    avg_count = sum(sum(tf_by_topic[t].values()) for t in nonempty) / len(nonempty)
    weights: dict[int, dict[str, float]] = {}
    for topic in topics:
        tf = tf_by_topic[topic]
        if not tf:
            log.warning("topic %s has no terms", topic)
            weights[topic] = {}
            continue
        weights[topic] = {
            term: count * math.log(1.0 + avg_count / f[term])
            for term, count in tf.items()
        }
    return weights


def top_terms(weights: dict[str, float], n: int) -> list[tuple[str, float]]:
    """Highest-weight terms, ties broken alphabetically."""
    ranked = sorted(weights.items(), key=lambda kv: (-kv[1], kv[0]))
    return ranked[:n]
