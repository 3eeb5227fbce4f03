"""Hierarchical topics over a flat clustering.

Base topics mirror the cluster assignment (noise keeps id -1). Parent topics
are materialized records created by agglomerative average-linkage merging of
base topics over cosine distance between their term-weight vectors, so every
level is navigable in O(1). Article sets of parents are unions of their
children's sets, which keeps the per-level partition invariant checkable.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from ..errors import ValidationError
from .ctfidf import ctfidf_weights, top_terms as rank_terms
from .tokenize import tokenize

NOISE_TOPIC = -1


@dataclass
class TopicRecord:
    topic_id: int
    level: int
    parent_id: int | None
    article_ids: set[str]
    newspaper_ids: set[str]
    top_terms: list[tuple[str, float]] = field(default_factory=list)
    centroid: list[float] | None = None

    @property
    def name(self) -> str:
        """Id plus the top terms, the usual compact topic label."""
        if self.topic_id == NOISE_TOPIC:
            return "-1_noise"
        terms = "_".join(t for t, _ in self.top_terms[:4])
        return f"{self.topic_id}_{terms}" if terms else str(self.topic_id)

    def to_dict(self, term_decimals: int = 6) -> dict:
        return {
            "topic_id": self.topic_id,
            "name": self.name,
            "level": self.level,
            "parent_id": self.parent_id,
            "article_ids": sorted(self.article_ids),
            "newspaper_ids": sorted(self.newspaper_ids),
            "top_terms": [
                [t, round(w, term_decimals)] for t, w in self.top_terms
            ],
            "centroid": (
                None
                if self.centroid is None
                else [round(float(x), 6) for x in self.centroid]
            ),
        }


@dataclass
class TopicTree:
    records: dict[int, TopicRecord]
    term_counts: dict[int, Counter] = field(default_factory=dict)
    weights: dict[int, dict[str, float]] = field(default_factory=dict)
    merge_report: list[int] = field(default_factory=list)
    # rebuild context, carried so merges can re-derive everything
    _text_by_article: dict[str, str] = field(default_factory=dict, repr=False)
    _newspaper_by_article: dict[str, str] = field(default_factory=dict, repr=False)
    _vectors: dict[str, np.ndarray] | None = field(default=None, repr=False)
    _terms_per_topic: int = field(default=10, repr=False)

    def __contains__(self, topic_id: int) -> bool:
        return topic_id in self.records

    def get(self, topic_id: int) -> TopicRecord:
        if topic_id not in self.records:
            raise ValidationError(f"unknown topic id {topic_id}")
        return self.records[topic_id]

    def base_topics(self, include_noise: bool = True) -> list[int]:
        out = [
            t
            for t, r in self.records.items()
            if r.level == 0 and (include_noise or t != NOISE_TOPIC)
        ]
        return sorted(out)

    def children(self, topic_id: int) -> list[int]:
        return sorted(
            t for t, r in self.records.items() if r.parent_id == topic_id
        )

    def max_level(self) -> int:
        return max(r.level for r in self.records.values())

    def nodes_at_level(self, level: int) -> list[int]:
        """Horizontal cut: topics of level <= `level` whose parent, if any,
        sits above the cut. Noise is excluded; together with noise these
        partition the corpus."""
        out = []
        for t, r in self.records.items():
            if t == NOISE_TOPIC or r.level > level:
                continue
            parent = r.parent_id
            if parent is None or self.records[parent].level > level:
                out.append(t)
        return sorted(out)

    def articles_at(self, topic_id: int) -> set[str]:
        return set(self.get(topic_id).article_ids)

    def topic_terms(self, topic_id: int, n: int) -> list[tuple[str, float]]:
        self.get(topic_id)
        return rank_terms(self.weights.get(topic_id, {}), n)

    def to_records(self) -> list[dict]:
        return [self.records[t].to_dict() for t in sorted(self.records)]

    def adjacency(self) -> list[dict]:
        return [
            {
                "topic_id": t,
                "name": self.records[t].name,
                "parent_id": self.records[t].parent_id,
                "level": self.records[t].level,
                "children": self.children(t),
                "article_count": len(self.records[t].article_ids),
            }
            for t in sorted(self.records)
        ]


def _centroid(article_ids: set[str], vectors: dict[str, np.ndarray] | None):
    if not vectors:
        return None
    rows = [vectors[a] for a in sorted(article_ids) if a in vectors]
    if not rows:
        return None
    return list(np.mean(np.asarray(rows, dtype=np.float64), axis=0))


def build_base_topics(
    labels_by_article: dict[str, int],
    newspaper_by_article: dict[str, str],
    text_by_article: dict[str, str],
    vectors: dict[str, np.ndarray] | None = None,
    terms_per_topic: int = 10,
) -> TopicTree:
    """Create level-0 records (noise included) and weight their terms."""
    members: dict[int, set[str]] = {NOISE_TOPIC: set()}
    for aid, label in labels_by_article.items():
        members.setdefault(label, set()).add(aid)
    term_counts = {
        topic: Counter(
            tok for aid in sorted(ids) for tok in tokenize(text_by_article.get(aid, ""))
        )
        for topic, ids in members.items()
    }
    weights = ctfidf_weights(term_counts)
    records = {}
    for topic, ids in members.items():
        records[topic] = TopicRecord(
            topic_id=topic,
            level=0,
            parent_id=None,
            article_ids=set(ids),
            newspaper_ids={newspaper_by_article[a] for a in ids},
            top_terms=rank_terms(weights[topic], terms_per_topic),
            centroid=_centroid(ids, vectors),
        )
    tree = TopicTree(records=records, term_counts=term_counts, weights=weights)
    tree._text_by_article = text_by_article  # kept for rebuilds
    tree._newspaper_by_article = newspaper_by_article
    tree._vectors = vectors
    tree._terms_per_topic = terms_per_topic
    return tree


def merge_single_source_topics(tree: TopicTree) -> TopicTree:
    """Fold every base topic with articles from only one newspaper into noise.

    Idempotent: surviving topics have at least two newspapers. The rebuilt
    tree carries a report of the merged topic ids.
    """
    single = [
        t
        for t in tree.base_topics(include_noise=False)
        if len(tree.records[t].newspaper_ids) <= 1
    ]
    labels = {}
    for t in tree.base_topics():
        for aid in tree.records[t].article_ids:
            labels[aid] = NOISE_TOPIC if t in single else t
    rebuilt = build_base_topics(
        labels,
        tree._newspaper_by_article,
        tree._text_by_article,
        tree._vectors,
        tree._terms_per_topic,
    )
    rebuilt.merge_report = sorted(tree.merge_report + single)
    return build_hierarchy(rebuilt) if _had_hierarchy(tree) else rebuilt


def _had_hierarchy(tree: TopicTree) -> bool:
    return any(r.level > 0 for r in tree.records.values())


def _cosine_distance_matrix(vecs: list[dict[str, float]]) -> np.ndarray:
    vocab = sorted({t for v in vecs for t in v})
    idx = {t: i for i, t in enumerate(vocab)}
    M = np.zeros((len(vecs), len(vocab)))
    for r, v in enumerate(vecs):
        for t, w in v.items():
            M[r, idx[t]] = w
    norms = np.linalg.norm(M, axis=1)
    norms[norms == 0] = 1.0
    sim = (M / norms[:, None]) @ (M / norms[:, None]).T
    return np.clip(1.0 - sim, 0.0, 2.0)


def build_hierarchy(tree: TopicTree) -> TopicTree:
    """Agglomerative average linkage over base-topic term vectors.

    Each merge materializes a parent one level above its deeper child, with
    ids continuing past the largest existing id. Equal distances resolve to
    the smaller topic-id pair. Fewer than two base topics: no-op.
    """
    base = tree.base_topics(include_noise=False)
    for t in list(tree.records):
        if tree.records[t].level > 0:
            del tree.records[t]
            tree.weights.pop(t, None)
            tree.term_counts.pop(t, None)
    for r in tree.records.values():
        r.parent_id = None
    if len(base) < 2:
        return tree

    # UPGMA over base distances: cluster distance is the mean pairwise
    # distance between member base topics.
    D = _cosine_distance_matrix([tree.weights[t] for t in base])
    active: dict[int, list[int]] = {t: [i] for i, t in enumerate(base)}
    next_id = max(tree.records) + 1
    while len(active) > 1:
        ids = sorted(active)
        best = None
        for i, a in enumerate(ids):
            for b in ids[i + 1 :]:
                d = float(
                    np.mean([D[x, y] for x in active[a] for y in active[b]])
                )
                if best is None or (d, a, b) < best:
                    best = (d, a, b)
        _, a, b = best
        child_a, child_b = tree.records[a], tree.records[b]
        parent = TopicRecord(
            topic_id=next_id,
            level=max(child_a.level, child_b.level) + 1,
            parent_id=None,
            article_ids=child_a.article_ids | child_b.article_ids,
            newspaper_ids=child_a.newspaper_ids | child_b.newspaper_ids,
        )
        child_a.parent_id = next_id
        child_b.parent_id = next_id
        tree.records[next_id] = parent
        tree.term_counts[next_id] = tree.term_counts[a] + tree.term_counts[b]
        tree.weights[next_id] = _reweigh(tree, next_id)
        parent.top_terms = rank_terms(tree.weights[next_id], tree._terms_per_topic)
        parent.centroid = _centroid(parent.article_ids, tree._vectors)
        active[next_id] = active.pop(a) + active.pop(b)
        next_id += 1
    return tree


def _reweigh(tree: TopicTree, topic_id: int) -> dict[str, float]:
    """Parent weights recomputed from merged documents with the base-topic
    collection statistics held fixed (empty classes excluded, as in
    ctfidf_weights)."""
    base = [t for t in tree.base_topics() if tree.term_counts[t]]
    f: Counter = Counter()
    for t in base:
        f.update(tree.term_counts[t])
    if not base:
        return {}
    avg = sum(sum(tree.term_counts[t].values()) for t in base) / len(base)
    tf = tree.term_counts[topic_id]
    return {term: c * math.log(1.0 + avg / f[term]) for term, c in tf.items()}
