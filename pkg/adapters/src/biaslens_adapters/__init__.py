"""Adapters that run external models and emit the biaslens file contracts.

Each emitter reads plain corpus files (articles.jsonl, optionally the
cleaned bodies export and contexts.jsonl) and writes one contract file:
embeddings.jsonl, sentiment.jsonl, entities.jsonl or entity_sentiment.jsonl,
plus a small manifest recording the model id, corpus hash and record count.

Deterministic offline backends (hashing embedder, lexicon scorer, gazetteer
tagger) exist so the contracts can be exercised without model weights; real
backends load sentence-transformers or transformers models when installed.
"""

__version__ = "0.1.0"
