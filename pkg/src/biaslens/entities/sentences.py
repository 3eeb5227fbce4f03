"""Sentence span indexing over cleaned article bodies.

A sentence ends after `.`, `!` or `?`, optionally followed by closing quotes
or brackets, then whitespace. Splits after a bundled list of 40 abbreviations
("Mr.", "U.S.", ...) are suppressed. Inter-sentence whitespace attaches to
the preceding span so the spans tile the body exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

_CANDIDATE_RE = re.compile(r"([.!?])([\"'”’)\]]*)(\s+)")


@lru_cache(maxsize=1)
def abbreviations() -> frozenset[str]:
    text = (resources.files("biaslens.data") / "abbreviations.txt").read_text("utf-8")
    return frozenset(w.strip() for w in text.splitlines() if w.strip())


@dataclass(frozen=True)
class SentenceSpan:
    start: int
    end: int

    def slice(self, body: str) -> str:
        return body[self.start : self.end]


def _is_abbreviation(body: str, period_index: int) -> bool:
    """True when the word token ending at this period is a known abbreviation."""
    i = period_index
    while i >= 0 and (body[i] == "." or body[i].isalpha()):
        i -= 1
    token = body[i + 1 : period_index + 1]
    return token in abbreviations()


def sentence_index(body: str) -> list[SentenceSpan]:
    """Ordered, non-overlapping spans covering the whole body."""
    if not body:
        return []
    spans: list[SentenceSpan] = []
    cursor = 0
    for match in _CANDIDATE_RE.finditer(body):
        if match.group(1) == "." and _is_abbreviation(body, match.start(1)):
            continue
        split_at = match.end()  # trailing whitespace stays with this span
        if split_at >= len(body):
            break
        spans.append(SentenceSpan(cursor, split_at))
        cursor = split_at
    if cursor < len(body):
        spans.append(SentenceSpan(cursor, len(body)))
    return spans


def span_containing(spans: list[SentenceSpan], offset: int) -> SentenceSpan:
    for span in spans:
        if span.start <= offset < span.end:
            return span
    return spans[-1] if spans else SentenceSpan(0, 0)
