"""Entity mention records and their loaders.

Offsets index Unicode scalar values into the cleaned article body, and the
slice body[start:end] must reproduce the surface exactly; anything else is
rejected with a diagnostic. Entity identity downstream is the exact-case
surface plus group, so "Xi" and "Xi Jinping" stay distinct.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from ..errors import ValidationError

ENTITY_GROUPS = ("PER", "ORG", "LOC", "MISC")


@dataclass(frozen=True)
class EntityMention:
    mention_id: str
    article_id: str
    entity_group: str
    surface: str
    detector_score: float
    start: int
    end: int

    def key(self) -> tuple[str, str]:
        return (self.surface, self.entity_group)

    def to_dict(self) -> dict:
        return {
            "mention_id": self.mention_id,
            "article_id": self.article_id,
            "entity_group": self.entity_group,
            "surface": self.surface,
            "detector_score": self.detector_score,
            "start": self.start,
            "end": self.end,
        }


@dataclass(frozen=True)
class EntitySentiment:
    mention_id: str
    positive: float
    neutral: float
    negative: float
    model_id: str = "external"

    def __post_init__(self):
        total = self.positive + self.neutral + self.negative
        if not (0.999 <= total <= 1.001):
            raise ValidationError(
                f"mention {self.mention_id}: probabilities sum to {total:.6f}"
            )

    @property
    def simplified(self) -> float:
        return self.positive - self.negative


@dataclass
class MentionSet:
    mentions: dict[str, EntityMention]
    sentiments: dict[str, EntitySentiment]
    aliases: dict[str, str] | None = None

    def by_article(self, article_id: str) -> list[EntityMention]:
        return sorted(
            (m for m in self.mentions.values() if m.article_id == article_id),
            key=lambda m: (m.start, m.mention_id),
        )

    def key_of(self, mention: EntityMention) -> tuple[str, str]:
        """Entity key with the optional alias map applied (case-insensitive
        keys). The mention record itself stays untouched; aliasing merges
        identities for counting and aggregation only."""
        if self.aliases:
            canonical = self.aliases.get(mention.surface.casefold())
            if canonical is not None:
                return (canonical, mention.entity_group)
        return mention.key()

    def __len__(self) -> int:
        return len(self.mentions)


def _validate_mention(rec: dict, bodies: dict[str, str]) -> EntityMention:
    aid = str(rec["article_id"])
    if aid not in bodies:
        raise ValidationError(f"unknown article {aid!r}")
    group = rec["entity_group"]
    if group not in ENTITY_GROUPS:
        raise ValidationError(f"unknown entity group {group!r}")
    start, end = int(rec["start"]), int(rec["end"])
    body = bodies[aid]
    if not (0 <= start < end <= len(body)):
        raise ValidationError(f"offsets [{start},{end}) outside body of {aid!r}")
    surface = str(rec["surface"])
    if body[start:end] != surface:
        raise ValidationError(
            f"offset mismatch in {aid!r}: body[{start}:{end}]={body[start:end]!r}"
            f" != surface {surface!r}"
        )
    return EntityMention(
        mention_id=str(rec["mention_id"]),
        article_id=aid,
        entity_group=group,
        surface=surface,
        detector_score=float(rec.get("detector_score", 1.0)),
        start=start,
        end=end,
    )


def load_mentions(
    path: str | Path,
    bodies: dict[str, str],
    alias_map: dict[str, str] | None = None,
) -> tuple[MentionSet, list[dict]]:
    """Read entities.jsonl against cleaned bodies; collect per-record rejects.

    alias_map optionally merges entity keys ("Nova Festival" to its canonical
    surface); keys are matched case-insensitively.
    """
    mentions: dict[str, EntityMention] = {}
    rejects: list[dict] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
                mention = _validate_mention(rec, bodies)
                if mention.mention_id in mentions:
                    raise ValidationError(f"duplicate mention id {mention.mention_id!r}")
            except (ValidationError, KeyError, TypeError, ValueError) as exc:
                rejects.append({"line": lineno, "reason": str(exc)})
                continue
            mentions[mention.mention_id] = mention
    aliases = (
        {k.casefold(): v for k, v in alias_map.items()} if alias_map else None
    )
    return MentionSet(mentions=mentions, sentiments={}, aliases=aliases), rejects


def load_entity_sentiments(
    path: str | Path, mention_set: MentionSet
) -> list[dict]:
    """Attach entity_sentiment.jsonl records to loaded mentions."""
    rejects: list[dict] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
                mid = str(rec["mention_id"])
                if mid not in mention_set.mentions:
                    raise ValidationError(f"unknown mention {mid!r}")
                if mid in mention_set.sentiments:
                    raise ValidationError(f"duplicate sentiment for {mid!r}")
                sent = EntitySentiment(
                    mention_id=mid,
                    positive=float(rec["positive"]),
                    neutral=float(rec["neutral"]),
                    negative=float(rec["negative"]),
                    model_id=str(rec.get("model_id", "external")),
                )
            except (ValidationError, KeyError, TypeError, ValueError) as exc:
                rejects.append({"line": lineno, "reason": str(exc)})
                continue
            mention_set.sentiments[mid] = sent
    return rejects
