"""Model backends.

Offline backends are deterministic and dependency-free; real backends load
neural models lazily and raise BackendUnavailable when the stack is not
installed, which the CLI turns into a clean nonzero exit.
"""

from __future__ import annotations

import hashlib
import re
from importlib import resources

import numpy as np

_WORD_RE = re.compile(r"[a-z']+")


class BackendUnavailable(RuntimeError):
    pass


# -- embeddings --------------------------------------------------------------

class HashingEmbedder:
    """Feature-hashing bag-of-words embedder: stable across runs and
    machines, no weights needed. Tokens hash to signed buckets; vectors are
    L2-normalized."""

    model_id = "hashing-v1"

    def __init__(self, dim: int = 64):
        self.dim = dim

    def encode(self, text: str) -> list[float]:
        vec = np.zeros(self.dim)
        for token in _WORD_RE.findall(text.lower()):
            digest = hashlib.md5(token.encode()).digest()
            bucket = int.from_bytes(digest[:4], "little") % self.dim
            sign = 1.0 if digest[4] % 2 == 0 else -1.0
            vec[bucket] += sign
        norm = float(np.linalg.norm(vec))
        if norm > 0:
            vec /= norm
        return [round(float(x), 6) for x in vec]


class SbertEmbedder:
    model_id = "sentence-transformers/all-MiniLM-L6-v2"

    def __init__(self, model_name: str | None = None):
        try:
            from sentence_transformers import SentenceTransformer
        except ImportError as exc:
            raise BackendUnavailable(
                "sentence-transformers is not installed; use --backend hash "
                "or install the [real] extra"
            ) from exc
        self.model_id = model_name or self.model_id
        try:
            self._model = SentenceTransformer(self.model_id)
        except Exception as exc:
            raise BackendUnavailable(f"could not load {self.model_id}: {exc}") from exc

    def encode(self, text: str) -> list[float]:
        return [float(x) for x in self._model.encode([text])[0]]


# -- sentiment ---------------------------------------------------------------

def polarity_to_probabilities(polarity: float) -> tuple[float, float, float]:
    """Map a continuous polarity in [-1, 1] to a three-class triple.

    Convention for wrapping polarity-only scorers: positive mass max(p, 0),
    negative mass max(-p, 0), the rest neutral.
    """
    p = max(-1.0, min(1.0, polarity))
    return (max(p, 0.0), 1.0 - abs(p), max(-p, 0.0))


def _load_lexicon(name: str) -> frozenset[str]:
    text = (resources.files("biaslens_adapters.data") / name).read_text("utf-8")
    return frozenset(w.strip() for w in text.splitlines() if w.strip())


class LexiconSentiment:
    """Word-list hit fractions as class probabilities; neutral absorbs the
    rest. Matches no neural model; exists for offline contract tests."""

    model_id = "adapter-lexicon-v1"

    def __init__(self):
        self._pos = _load_lexicon("positive_words.txt")
        self._neg = _load_lexicon("negative_words.txt")

    def score(self, text: str) -> tuple[float, float, float]:
        tokens = _WORD_RE.findall(text.lower())
        if not tokens:
            return (0.0, 1.0, 0.0)
        p = sum(1 for t in tokens if t in self._pos) / len(tokens)
        n = sum(1 for t in tokens if t in self._neg) / len(tokens)
        return (p, 1.0 - p - n, n)

    def score_target(self, left: str, target: str, right: str):
        return self.score(f"{left}{target}{right}")


class TransformerSentiment:
    """Three-class news sentiment via a transformers pipeline."""

    model_id = "cardiffnlp/twitter-roberta-base-sentiment-latest"

    def __init__(self, model_name: str | None = None):
        try:
            from transformers import pipeline
        except ImportError as exc:
            raise BackendUnavailable(
                "transformers is not installed; use --backend lexicon "
                "or install the [real] extra"
            ) from exc
        self.model_id = model_name or self.model_id
        try:
            self._pipe = pipeline(
                "text-classification", model=self.model_id, top_k=None
            )
        except Exception as exc:
            raise BackendUnavailable(f"could not load {self.model_id}: {exc}") from exc

    def score(self, text: str) -> tuple[float, float, float]:
        results = {r["label"].lower(): r["score"] for r in self._pipe(text[:2000])[0]}
        p = results.get("positive", 0.0)
        n = results.get("negative", 0.0)
        neu = results.get("neutral", max(0.0, 1.0 - p - n))
        total = p + neu + n
        return (p / total, neu / total, n / total)

    def score_target(self, left: str, target: str, right: str):
        return self.score(f"{left}{target}{right}")


# -- named entities ----------------------------------------------------------

class GazetteerNer:
    """Longest-match surface scanning against a fixed surface->group map.

    Matches never overlap; scanning is left to right with longer surfaces
    preferred, so offsets are reproducible on any machine.
    """

    model_id = "gazetteer-v1"

    def __init__(self, gazetteer: dict[str, str]):
        self.gazetteer = dict(gazetteer)
        self._surfaces = sorted(self.gazetteer, key=len, reverse=True)

    def tag(self, body: str) -> list[dict]:
        taken: list[tuple[int, int]] = []
        found = []
        for surface in self._surfaces:
            start = 0
            while True:
                pos = body.find(surface, start)
                if pos == -1:
                    break
                span = (pos, pos + len(surface))
                if not any(a < span[1] and span[0] < b for a, b in taken):
                    taken.append(span)
                    found.append(
                        {
                            "entity_group": self.gazetteer[surface],
                            "surface": surface,
                            "detector_score": 1.0,
                            "start": span[0],
                            "end": span[1],
                        }
                    )
                start = pos + 1
        return sorted(found, key=lambda m: m["start"])


class BertNer:
    """Entity-level NER via a transformers pipeline with aggregation, so
    multi-token entities come back whole."""

    model_id = "dslim/bert-base-NER"
    _GROUP_MAP = {"PER": "PER", "ORG": "ORG", "LOC": "LOC", "MISC": "MISC"}

    def __init__(self, model_name: str | None = None):
        try:
            from transformers import pipeline
        except ImportError as exc:
            raise BackendUnavailable(
                "transformers is not installed; use --backend gazetteer "
                "or install the [real] extra"
            ) from exc
        self.model_id = model_name or self.model_id
        try:
            self._pipe = pipeline(
                "token-classification",
                model=self.model_id,
                aggregation_strategy="simple",
            )
        except Exception as exc:
            raise BackendUnavailable(f"could not load {self.model_id}: {exc}") from exc

    def tag(self, body: str) -> list[dict]:
        out = []
        for hit in self._pipe(body):
            group = self._GROUP_MAP.get(hit["entity_group"])
            if group is None:
                continue
            start, end = int(hit["start"]), int(hit["end"])
            out.append(
                {
                    "entity_group": group,
                    "surface": body[start:end],
                    "detector_score": float(hit["score"]),
                    "start": start,
                    "end": end,
                }
            )
        return out
