"""Domain types for the article corpus and newspaper registry."""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass, field

from ..errors import ValidationError


@dataclass(frozen=True)
class Newspaper:
    id: str
    name: str
    country: str = ""
    city: str = ""
    latitude: float | None = None
    longitude: float | None = None
    source_rank: int | None = None

    def __post_init__(self):
        lat, lon = self.latitude, self.longitude
        if (lat is None) != (lon is None):
            raise ValidationError(
                f"newspaper {self.id!r}: latitude and longitude must be given together"
            )
        if lat is not None and not (-90.0 <= lat <= 90.0):
            raise ValidationError(f"newspaper {self.id!r}: latitude {lat} out of range")
        if lon is not None and not (-180.0 <= lon <= 180.0):
            raise ValidationError(f"newspaper {self.id!r}: longitude {lon} out of range")

    @property
    def geolocated(self) -> bool:
        return self.latitude is not None


@dataclass(frozen=True)
class Article:
    """One ingested article. Title and body are kept verbatim; cleaning
    produces a separate derived body so re-cleaning never needs re-ingest."""

    id: str
    newspaper_id: str
    title: str
    body: str
    published_at: str | None = None
    url: str | None = None
    language_tag: str | None = None


@dataclass(frozen=True)
class NoiseRule:
    newspaper_id: str
    pattern: str
    order: int = 0

    def __post_init__(self):
        try:
            re.compile(self.pattern, re.MULTILINE | re.DOTALL)
        except re.error as exc:
            raise ValidationError(
                f"noise rule for {self.newspaper_id!r} does not compile: {exc}"
            ) from exc

    def compiled(self) -> re.Pattern:
        return re.compile(self.pattern, re.MULTILINE | re.DOTALL)


@dataclass(frozen=True)
class RecordError:
    """A rejected input record. Ingest and loaders collect these and continue."""

    source: str
    record_id: str
    reason: str


@dataclass
class CorpusStats:
    article_count: int
    per_newspaper: dict[str, int]
    date_range: tuple[str | None, str | None]
    language_histogram: dict[str, int]

    def to_dict(self) -> dict:
        return {
            "article_count": self.article_count,
            "per_newspaper": dict(sorted(self.per_newspaper.items())),
            "date_range": list(self.date_range),
            "language_histogram": dict(sorted(self.language_histogram.items())),
        }


@dataclass
class Corpus:
    """Immutable corpus snapshot. All downstream stages key off content_hash."""

    newspapers: dict[str, Newspaper]
    articles: dict[str, Article] = field(default_factory=dict)
    order: list[str] = field(default_factory=list)

    def add(self, article: Article) -> None:
        if article.id in self.articles:
            raise ValidationError(f"duplicate article id {article.id!r}")
        if article.newspaper_id not in self.newspapers:
            raise ValidationError(
                f"article {article.id!r}: unknown newspaper {article.newspaper_id!r}"
            )
        self.articles[article.id] = article
        self.order.append(article.id)

    def __len__(self) -> int:
        return len(self.articles)

    def __iter__(self):
        return (self.articles[a] for a in self.order)

    def content_hash(self) -> str:
        h = hashlib.sha256()
        for aid in self.order:
            a = self.articles[aid]
            h.update(
                json.dumps(
                    [a.id, a.newspaper_id, a.title, a.body, a.published_at, a.url, a.language_tag],
                    ensure_ascii=False,
                ).encode("utf-8")
            )
        for nid in sorted(self.newspapers):
            n = self.newspapers[nid]
            h.update(
                json.dumps(
                    [n.id, n.name, n.country, n.city, n.latitude, n.longitude, n.source_rank]
                ).encode("utf-8")
            )
        return h.hexdigest()

    def stats(self) -> CorpusStats:
        per_np: dict[str, int] = {}
        langs: dict[str, int] = {}
        dates = [a.published_at for a in self if a.published_at]
        for a in self:
            per_np[a.newspaper_id] = per_np.get(a.newspaper_id, 0) + 1
            tag = a.language_tag or "untagged"
            langs[tag] = langs.get(tag, 0) + 1
        date_range = (min(dates), max(dates)) if dates else (None, None)
        return CorpusStats(len(self), per_np, date_range, langs)
