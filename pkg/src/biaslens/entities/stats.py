"""Per-topic entity selection and per-newspaper sentiment aggregation."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .mentions import EntityMention, MentionSet

EntityKey = tuple[str, str]  # (exact-case surface, entity group)


def top_entities(
    mention_set: MentionSet,
    article_ids: set[str],
    k: int = 10,
    descendant_base_sets: list[set[str]] | None = None,
) -> list[EntityKey]:
    """Top-k entity keys by mention count, ties by surface then group.

    For hierarchical topics pass the base-topic article sets: the analyzed
    set is then the union of each base topic's own top-k, ranked by count
    over the whole topic. An entity that tops one subtopic is not analyzed
    in siblings where it is not a top entity.
    """
    if descendant_base_sets:
        keys: set[EntityKey] = set()
        for base_ids in descendant_base_sets:
            keys.update(top_entities(mention_set, base_ids, k))
        counts = _counts(mention_set, article_ids)
        return sorted(keys, key=lambda key: (-counts.get(key, 0), key[0], key[1]))
    counts = _counts(mention_set, article_ids)
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0][0], kv[0][1]))
    return [key for key, _ in ranked[:k]]


def _counts(mention_set: MentionSet, article_ids: set[str]) -> Counter:
    counts: Counter = Counter()
    for mention in mention_set.mentions.values():
        if mention.article_id in article_ids:
            counts[mention_set.key_of(mention)] += 1
    return counts


@dataclass
class EntityNewspaperStats:
    newspaper_id: str
    mention_count: int
    mean_simplified: float
    mean_neutral: float

    def to_dict(self) -> dict:
        return {
            "newspaper_id": self.newspaper_id,
            "mention_count": self.mention_count,
            "mean_simplified": round(self.mean_simplified, 6),
            "mean_neutral": round(self.mean_neutral, 6),
        }


def entity_newspaper_stats(
    mention_set: MentionSet,
    entity_key: EntityKey,
    article_ids: set[str],
    newspaper_by_article: dict[str, str],
) -> dict[str, EntityNewspaperStats]:
    """Mean simplified and neutral scores per newspaper for one entity,
    over scored mentions inside the topic's articles."""
    per_np: dict[str, list] = {}
    for mention in mention_set.mentions.values():
        if (
            mention.article_id not in article_ids
            or mention_set.key_of(mention) != entity_key
        ):
            continue
        sent = mention_set.sentiments.get(mention.mention_id)
        if sent is None:
            continue
        per_np.setdefault(newspaper_by_article[mention.article_id], []).append(sent)
    out = {}
    for np_id, sents in sorted(per_np.items()):
        out[np_id] = EntityNewspaperStats(
            newspaper_id=np_id,
            mention_count=len(sents),
            mean_simplified=sum(s.simplified for s in sents) / len(sents),
            mean_neutral=sum(s.neutral for s in sents) / len(sents),
        )
    return out
