"""Corpus ingestion from the documented file formats.

Duplicate article texts and titles are kept on purpose: the same piece
republished by two newspapers, or twice by one, is itself a bias signal.
"""

from __future__ import annotations

import json
from pathlib import Path

from ..errors import ValidationError
from .models import Article, Corpus, CorpusStats, Newspaper, NoiseRule, RecordError

ARTICLE_REQUIRED = ("id", "newspaper_id", "title", "body")


def load_newspapers(path: str | Path) -> dict[str, Newspaper]:
    """Read newspapers.json (array of newspaper objects)."""
    raw = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(raw, list):
        raise ValidationError(f"{path}: expected a JSON array of newspapers")
    out: dict[str, Newspaper] = {}
    for rec in raw:
        np_ = Newspaper(
            id=str(rec["id"]),
            name=rec.get("name", str(rec["id"])),
            country=rec.get("country", ""),
            city=rec.get("city", ""),
            latitude=rec.get("latitude"),
            longitude=rec.get("longitude"),
            source_rank=rec.get("source_rank"),
        )
        if np_.id in out:
            raise ValidationError(f"{path}: duplicate newspaper id {np_.id!r}")
        out[np_.id] = np_
    return out


def load_noise_rules(path: str | Path) -> list[NoiseRule]:
    """Read noise_rules.json; rules are applied in ascending `order` per newspaper."""
    raw = json.loads(Path(path).read_text(encoding="utf-8"))
    rules = [
        NoiseRule(
            newspaper_id=str(r["newspaper_id"]),
            pattern=r["pattern"],
            order=int(r.get("order", 0)),
        )
        for r in raw
    ]
    return sorted(rules, key=lambda r: (r.newspaper_id, r.order))


def load_articles(path: str | Path):
    """Yield (line_number, record_dict | error_string) from articles.jsonl."""
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                yield lineno, f"malformed JSON: {exc}"
                continue
            missing = [k for k in ARTICLE_REQUIRED if k not in rec]
            if missing:
                yield lineno, f"missing fields: {', '.join(missing)}"
                continue
            yield lineno, rec


def ingest_corpus(
    articles_path: str | Path, newspapers_path: str | Path
) -> tuple[Corpus, CorpusStats, list[RecordError]]:
    """Load the corpus. Record-level problems are collected, not fatal.

    Returns the corpus, its stats, and the list of rejected records.
    Re-ingesting the same files yields a byte-identical store state
    (ordering follows file order; nothing is timestamped).
    """
    newspapers = load_newspapers(newspapers_path)
    corpus = Corpus(newspapers=newspapers)
    errors: list[RecordError] = []
    for lineno, rec in load_articles(articles_path):
        if isinstance(rec, str):
            errors.append(RecordError("articles", f"line {lineno}", rec))
            continue
        article = Article(
            id=str(rec["id"]),
            newspaper_id=str(rec["newspaper_id"]),
            title=str(rec["title"]),
            body=str(rec["body"]),
            published_at=rec.get("published_at"),
            url=rec.get("url"),
            language_tag=rec.get("language_tag"),
        )
        try:
            corpus.add(article)
        except ValidationError as exc:
            errors.append(RecordError("articles", article.id, str(exc)))
    return corpus, corpus.stats(), errors
