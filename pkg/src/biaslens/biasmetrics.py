"""Event-selection and sentiment deviation metrics plus spectrum geometry.

Publishing rate: p(N_t) = |a(N_t)| / |a(N)| with the newspaper total
including its noise-cluster articles. Rate deviation d = p - mean(p) and
sentiment deviation sd = s - mean(s), both against the unweighted mean over
the included newspaper set, so each sums to zero over that set. Deviations
are deliberately not normalized; absolute differences carry information.

The mean set defaults to newspapers covering the topic (or mentioning the
entity); the include-zero variant adds the missing newspapers with zeros.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError


@dataclass
class TopicShare:
    newspaper_id: str
    topic_id: int
    article_count: int
    total_count: int
    rate: float
    rate_deviation: float = 0.0

    def to_dict(self) -> dict:
        return {
            "newspaper_id": self.newspaper_id,
            "topic_id": self.topic_id,
            "article_count": self.article_count,
            "total_count": self.total_count,
            "rate": round(self.rate, 6),
            "rate_deviation": round(self.rate_deviation, 6),
        }


@dataclass
class SentimentSummary:
    newspaper_id: str
    scope: str  # topic id as string, or "ALL"
    subject: str  # doc kind, or "entity:<surface>|<group>"
    mean_simplified: float
    unit_count: int
    sentiment_deviation: float = 0.0

    def to_dict(self) -> dict:
        return {
            "newspaper_id": self.newspaper_id,
            "scope": self.scope,
            "subject": self.subject,
            "mean_simplified": round(self.mean_simplified, 6),
            "unit_count": self.unit_count,
            "sentiment_deviation": round(self.sentiment_deviation, 6),
        }


@dataclass
class SpectrumPoint:
    newspaper_id: str
    x: float  # sentiment deviation
    y: float  # rate deviation (articles) or mention-count deviation (entity)
    size: int  # article count or mention count
    color_value: float  # mean simplified score

    def to_dict(self) -> dict:
        return {
            "newspaper_id": self.newspaper_id,
            "x": round(self.x, 6),
            "y": round(self.y, 6),
            "size": self.size,
            "color_value": round(self.color_value, 6),
        }


@dataclass
class MapPoint:
    newspaper_id: str
    latitude: float
    longitude: float
    size_value: float  # rate deviation; sign rendered as filled vs hollow
    color_value: float  # mean simplified score

    def to_dict(self) -> dict:
        return {
            "newspaper_id": self.newspaper_id,
            "latitude": self.latitude,
            "longitude": self.longitude,
            "size_value": round(self.size_value, 6),
            "color_value": round(self.color_value, 6),
        }


def publishing_rate(topic_count: int, total_count: int) -> float:
    """Share of a newspaper's output (noise included) on this topic."""
    if total_count <= 0:
        raise ValidationError("newspaper has no articles at all")
    return topic_count / total_count


def rate_deviation(
    topic_id: int,
    topic_counts: dict[str, int],
    total_counts: dict[str, int],
    include_zero_coverage: bool = False,
) -> dict[str, TopicShare]:
    """TopicShare per newspaper with deviations against the unweighted mean.

    topic_counts holds covering newspapers only; total_counts every
    newspaper. With include_zero_coverage the mean runs over all newspapers,
    zeros assigned to the absent ones.
    """
    if not topic_counts:
        raise ValidationError(f"topic {topic_id} has no articles")
    included = (
        sorted(total_counts) if include_zero_coverage else sorted(topic_counts)
    )
    shares = {}
    for np_id in included:
        count = topic_counts.get(np_id, 0)
        shares[np_id] = TopicShare(
            newspaper_id=np_id,
            topic_id=topic_id,
            article_count=count,
            total_count=total_counts[np_id],
            rate=publishing_rate(count, total_counts[np_id]),
        )
    mean = sum(s.rate for s in shares.values()) / len(shares)
    for s in shares.values():
        s.rate_deviation = s.rate - mean
    return shares


def deviations_from_means(rates: dict[str, float]) -> dict[str, float]:
    """d = value - unweighted mean, over exactly the given set."""
    if not rates:
        return {}
    mean = sum(rates.values()) / len(rates)
    return {k: v - mean for k, v in rates.items()}


def newspaper_mean_sentiment(
    scores_by_newspaper: dict[str, list[float]],
    scope: str,
    subject: str,
) -> dict[str, SentimentSummary]:
    """Arithmetic mean of simplified scores per newspaper. Doc kinds are
    never mixed; callers pass scores of one kind only."""
    out = {}
    for np_id, values in sorted(scores_by_newspaper.items()):
        if not values:
            continue
        out[np_id] = SentimentSummary(
            newspaper_id=np_id,
            scope=scope,
            subject=subject,
            mean_simplified=sum(values) / len(values),
            unit_count=len(values),
        )
    return out


def sentiment_deviation(
    summaries: dict[str, SentimentSummary],
) -> dict[str, SentimentSummary]:
    """sd = newspaper mean minus the unweighted mean of newspaper means."""
    if not summaries:
        return summaries
    mean = sum(s.mean_simplified for s in summaries.values()) / len(summaries)
    for s in summaries.values():
        s.sentiment_deviation = s.mean_simplified - mean
    return summaries


def article_spectrum(
    shares: dict[str, TopicShare],
    summaries: dict[str, SentimentSummary],
) -> list[SpectrumPoint]:
    """Article-mode spectrum: x = sd, y = d, size = article count.

    Points exist for newspapers present in both inputs (covering newspapers
    with at least one scored document)."""
    points = []
    for np_id in sorted(summaries):
        if np_id not in shares:
            continue
        s = summaries[np_id]
        points.append(
            SpectrumPoint(
                newspaper_id=np_id,
                x=s.sentiment_deviation,
                y=shares[np_id].rate_deviation,
                size=shares[np_id].article_count,
                color_value=s.mean_simplified,
            )
        )
    return points


def entity_spectrum(
    mention_counts: dict[str, int],
    summaries: dict[str, SentimentSummary],
) -> list[SpectrumPoint]:
    """Entity-mode spectrum: y is the deviation of the newspaper's mention
    count from the mean count over mentioning newspapers."""
    if not mention_counts:
        return []
    count_dev = deviations_from_means({k: float(v) for k, v in mention_counts.items()})
    points = []
    for np_id in sorted(summaries):
        if np_id not in mention_counts:
            continue
        s = summaries[np_id]
        points.append(
            SpectrumPoint(
                newspaper_id=np_id,
                x=s.sentiment_deviation,
                y=count_dev[np_id],
                size=mention_counts[np_id],
                color_value=s.mean_simplified,
            )
        )
    return points


def map_points(
    shares: dict[str, TopicShare],
    summaries: dict[str, SentimentSummary],
    coordinates: dict[str, tuple[float, float]],
) -> tuple[list[MapPoint], int]:
    """Join deviations and means onto newspaper HQ coordinates.

    Returns the points plus how many covering newspapers lacked coordinates.
    """
    points = []
    skipped = 0
    for np_id in sorted(shares):
        if np_id not in coordinates:
            skipped += 1
            continue
        lat, lon = coordinates[np_id]
        mean = summaries[np_id].mean_simplified if np_id in summaries else 0.0
        points.append(
            MapPoint(
                newspaper_id=np_id,
                latitude=lat,
                longitude=lon,
                size_value=shares[np_id].rate_deviation,
                color_value=mean,
            )
        )
    return points, skipped
