"""Document sentiment scores: validation, simplification and a baseline.

Scores normally arrive from external model adapters as three-class
probabilities. The simplified score is positive minus negative, in [-1, 1];
the neutral probability stays on the record because it matters when judging
whether an entity is really talked about with any polarity at all.

The bundled lexicon scorer exists only so the pipeline and its acceptance
suite can run with no neural model. It makes no claim of approximating one.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .corpus.models import Corpus
from .errors import ValidationError

PROBABILITY_TOLERANCE = 1e-3
TOKEN_LIMIT = 512

DOC_KINDS = ("title", "body")

_WORD_RE = re.compile(r"[a-z']+")


@dataclass(frozen=True)
class DocumentSentiment:
    article_id: str
    doc_kind: str
    positive: float
    neutral: float
    negative: float
    model_id: str = "external"

    def __post_init__(self):
        if self.doc_kind not in DOC_KINDS:
            raise ValidationError(
                f"{self.article_id}: doc_kind must be one of {DOC_KINDS}"
            )
        for name in ("positive", "neutral", "negative"):
            v = getattr(self, name)
            if not (0.0 <= v <= 1.0):
                raise ValidationError(f"{self.article_id}: {name}={v} outside [0,1]")
        total = self.positive + self.neutral + self.negative
        if not (1.0 - PROBABILITY_TOLERANCE <= total <= 1.0 + PROBABILITY_TOLERANCE):
            raise ValidationError(
                f"{self.article_id}: probabilities sum to {total:.6f}"
            )

    @property
    def simplified(self) -> float:
        return self.positive - self.negative

    def to_dict(self) -> dict:
        return {
            "article_id": self.article_id,
            "doc_kind": self.doc_kind,
            "positive": self.positive,
            "neutral": self.neutral,
            "negative": self.negative,
            "simplified": self.simplified,
            "model_id": self.model_id,
        }


def simplified_score(positive: float, neutral: float, negative: float) -> float:
    """positive minus negative, after validating the probability triple."""
    total = positive + neutral + negative
    if not (1.0 - PROBABILITY_TOLERANCE <= total <= 1.0 + PROBABILITY_TOLERANCE):
        raise ValidationError(f"probabilities sum to {total:.6f}, not 1")
    return positive - negative


@dataclass
class ScoreSet:
    scores: dict[tuple[str, str], DocumentSentiment]

    def get(self, article_id: str, doc_kind: str) -> DocumentSentiment | None:
        return self.scores.get((article_id, doc_kind))

    def coverage(self, corpus: Corpus) -> dict[str, float]:
        n = len(corpus)
        out = {}
        for kind in DOC_KINDS:
            scored = sum(1 for (aid, k) in self.scores if k == kind)
            out[kind] = scored / n if n else 0.0
        return out

    def __len__(self) -> int:
        return len(self.scores)


def load_scores(
    path: str | Path, corpus: Corpus
) -> tuple[ScoreSet, list[dict]]:
    """Read sentiment.jsonl: reject unknown articles and duplicate
    (article, kind, model) triples, collecting per-line reports."""
    scores: dict[tuple[str, str], DocumentSentiment] = {}
    seen: set[tuple[str, str, str]] = set()
    rejects: list[dict] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
                if rec["article_id"] not in corpus.articles:
                    raise ValidationError(f"unknown article {rec['article_id']!r}")
                sent = DocumentSentiment(
                    article_id=str(rec["article_id"]),
                    doc_kind=rec["doc_kind"],
                    positive=float(rec["positive"]),
                    neutral=float(rec["neutral"]),
                    negative=float(rec["negative"]),
                    model_id=str(rec.get("model_id", "external")),
                )
                key = (sent.article_id, sent.doc_kind, sent.model_id)
                if key in seen:
                    raise ValidationError(f"duplicate score for {key}")
                seen.add(key)
            except (ValidationError, KeyError, TypeError, ValueError) as exc:
                rejects.append({"line": lineno, "reason": str(exc)})
                continue
            scores[(sent.article_id, sent.doc_kind)] = sent
    return ScoreSet(scores), rejects


@lru_cache(maxsize=2)
def _lexicon(polarity: str) -> frozenset[str]:
    text = (resources.files("biaslens.data") / f"lexicon_{polarity}.txt").read_text("utf-8")
    return frozenset(w.strip() for w in text.splitlines() if w.strip())


def baseline_lexicon_score(text: str) -> tuple[float, float, float]:
    """Deterministic (positive, neutral, negative) from bundled word lists.

    p and n are the lexicon hit fractions over matched word tokens; with no
    tokens at all the text counts as fully neutral.
    """
    tokens = _WORD_RE.findall(text.lower())
    if not tokens:
        return (0.0, 1.0, 0.0)
    pos_hits = sum(1 for t in tokens if t in _lexicon("positive"))
    neg_hits = sum(1 for t in tokens if t in _lexicon("negative"))
    p = pos_hits / len(tokens)
    n = neg_hits / len(tokens)
    return (p, 1.0 - p - n, n)


def baseline_document_scores(
    corpus: Corpus, body_by_article: dict[str, str] | None = None
) -> ScoreSet:
    """Score every article title and body with the lexicon baseline."""
    scores = {}
    for article in corpus:
        body = (body_by_article or {}).get(article.id, article.body)
        for kind, text in (("title", article.title), ("body", body)):
            p, neu, n = baseline_lexicon_score(text)
            scores[(article.id, kind)] = DocumentSentiment(
                article_id=article.id,
                doc_kind=kind,
                positive=p,
                neutral=neu,
                negative=n,
                model_id="baseline-lexicon",
            )
    return ScoreSet(scores)


def truncation_audit(
    corpus: Corpus, token_limit: int = TOKEN_LIMIT
) -> list[dict]:
    """Whitespace-token counts strictly above the limit, reported only."""
    over = []
    for article in corpus:
        for kind, text in (("title", article.title), ("body", article.body)):
            count = len(text.split())
            if count > token_limit:
                over.append(
                    {"article_id": article.id, "doc_kind": kind, "tokens": count}
                )
    return over
