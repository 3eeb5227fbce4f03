"""Left/target/right contexts for target-dependent sentiment scoring.

Sentence mode takes the containing sentence; window(w) mode takes up to w
characters each side, clipped at the body bounds. Auto mode, the default,
uses the sentence unless it is longer than 400 characters, in which case it
falls back to a 150-character window. In every mode left+target+right is a
contiguous slice of the body and target equals the mention surface.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ValidationError
from .mentions import EntityMention
from .sentences import SentenceSpan, sentence_index, span_containing

WINDOW_CHARS = 150
MAX_SENTENCE_CONTEXT_CHARS = 400


@dataclass(frozen=True)
class TargetContext:
    mention_id: str
    left: str
    target: str
    right: str

    def to_dict(self) -> dict:
        return {
            "mention_id": self.mention_id,
            "left": self.left,
            "target": self.target,
            "right": self.right,
        }


def make_context(
    body: str,
    mention: EntityMention,
    mode: str = "auto",
    spans: list[SentenceSpan] | None = None,
) -> TargetContext:
    """Build the mention's context in the requested mode.

    mode is one of "sentence", "window" (150 chars), "window:N", or "auto".
    """
    if body[mention.start : mention.end] != mention.surface:
        raise ValidationError(
            f"mention {mention.mention_id}: offsets do not match surface"
        )
    if mode == "sentence":
        return _sentence_context(body, mention, spans)
    if mode == "auto":
        if spans is None:
            spans = sentence_index(body)
        span = _covering_span(spans, mention)
        if span.end - span.start > MAX_SENTENCE_CONTEXT_CHARS:
            return _window_context(body, mention, WINDOW_CHARS)
        return _from_span(body, mention, span)
    if mode == "window":
        return _window_context(body, mention, WINDOW_CHARS)
    if mode.startswith("window:"):
        return _window_context(body, mention, int(mode.split(":", 1)[1]))
    raise ValidationError(f"unknown context mode {mode!r}")


def _sentence_context(body, mention, spans) -> TargetContext:
    if spans is None:
        spans = sentence_index(body)
    return _from_span(body, mention, _covering_span(spans, mention))


def _covering_span(spans: list[SentenceSpan], mention: EntityMention) -> SentenceSpan:
    """Sentence containing the mention start, extended to cover its end if
    the detector straddled a boundary."""
    span = span_containing(spans, mention.start)
    end = span.end
    if mention.end > end:
        end = span_containing(spans, mention.end - 1).end
    return SentenceSpan(span.start, max(end, mention.end))


def _from_span(body, mention, span) -> TargetContext:
    return TargetContext(
        mention_id=mention.mention_id,
        left=body[span.start : mention.start],
        target=mention.surface,
        right=body[mention.end : span.end],
    )


def _window_context(body, mention, window: int) -> TargetContext:
    left_start = max(0, mention.start - window)
    right_end = min(len(body), mention.end + window)
    return TargetContext(
        mention_id=mention.mention_id,
        left=body[left_start : mention.start],
        target=mention.surface,
        right=body[mention.end : right_end],
    )
