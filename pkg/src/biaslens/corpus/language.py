"""Character-trigram language classification and the corpus language filter.

External language tags always win; the trigram scorer only handles untagged
articles. Profiles are built once, lazily, from small bundled seed texts for
{en, de, fr, es}, which keeps the package free of model dependencies.
"""

from __future__ import annotations

import logging
import math
import re
from collections import Counter
from importlib import resources

from .models import Corpus

log = logging.getLogger(__name__)

PROFILE_LANGUAGES = ("en", "de", "fr", "es")
MIN_CLASSIFIABLE_CHARS = 20

_WORD_RE = re.compile(r"[^\W\d_]+", re.UNICODE)

_profiles: dict[str, dict[str, float]] | None = None


def _trigrams(text: str) -> Counter:
    counts: Counter = Counter()
    for word in _WORD_RE.findall(text.lower()):
        padded = f" {word} "
        for i in range(len(padded) - 2):
            counts[padded[i : i + 3]] += 1
    return counts


def _normalize(counts: Counter) -> dict[str, float]:
    norm = math.sqrt(sum(c * c for c in counts.values()))
    if norm == 0:
        return {}
    return {g: c / norm for g, c in counts.items()}


def _load_profiles() -> dict[str, dict[str, float]]:
    global _profiles
    if _profiles is None:
        _profiles = {}
        seeds = resources.files("biaslens.data.seed_text")
        for lang in PROFILE_LANGUAGES:
            text = (seeds / f"{lang}.txt").read_text(encoding="utf-8")
            _profiles[lang] = _normalize(_trigrams(text))
    return _profiles


def classify_language(text: str) -> str | None:
    """Best-matching profile language, or None for unclassifiable input.

    Texts shorter than 20 characters are not classified.
    """
    if len(text.strip()) < MIN_CLASSIFIABLE_CHARS:
        return None
    vec = _normalize(_trigrams(text))
    if not vec:
        return None
    best_lang, best_score = None, 0.0
    for lang, profile in _load_profiles().items():
        score = sum(w * profile.get(g, 0.0) for g, w in vec.items())
        if score > best_score:
            best_lang, best_score = lang, score
    return best_lang


def filter_language(corpus: Corpus, keep_tag: str = "en") -> tuple[list[str], list[str]]:
    """Partition article ids into (kept, removed) for a language filter pass.

    Nothing is deleted; callers flag the removed set as excluded. Articles
    carrying a language tag are judged by the tag alone; untagged articles go
    through the trigram scorer. Unclassifiable articles stay kept.
    """
    kept: list[str] = []
    removed: list[str] = []
    for article in corpus:
        if article.language_tag is not None:
            tag = article.language_tag.split("-")[0].lower()
            (kept if tag == keep_tag.lower() else removed).append(article.id)
            continue
        detected = classify_language(f"{article.title}\n{article.body}")
        if detected is None:
            log.warning("article %s too short to classify; keeping", article.id)
            kept.append(article.id)
        elif detected == keep_tag.lower():
            kept.append(article.id)
        else:
            removed.append(article.id)
    return kept, removed
