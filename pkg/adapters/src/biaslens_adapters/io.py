"""Shared file helpers: contract-conformant reads and atomic writes."""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path


def read_jsonl(path: str | Path) -> list[dict]:
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(json.loads(line))
    return out


def read_articles(articles_path: str | Path, cleaned_path: str | Path | None):
    """Articles with bodies swapped for cleaned bodies when provided.

    Articles flagged excluded in the cleaned export are dropped, mirroring
    what the analysis pipeline will score.
    """
    articles = read_jsonl(articles_path)
    if cleaned_path is None:
        return articles
    cleaned = {r["article_id"]: r for r in read_jsonl(cleaned_path)}
    out = []
    for rec in articles:
        c = cleaned.get(rec["id"])
        if c is None or c.get("excluded"):
            continue
        rec = dict(rec)
        rec["body"] = c["body"]
        out.append(rec)
    return out


def corpus_hash(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def write_contract(
    out_path: str | Path,
    records: list[dict],
    model_id: str,
    kind: str,
    corpus_digest: str,
) -> None:
    """Write the contract file and its manifest atomically: a failure while
    producing records leaves no partial files behind."""
    out_path = Path(out_path)
    payload = "".join(json.dumps(r, ensure_ascii=False) + "\n" for r in records)
    tmp = out_path.with_suffix(out_path.suffix + ".tmp")
    tmp.write_text(payload, encoding="utf-8")
    os.replace(tmp, out_path)
    manifest = {
        "model_id": model_id,
        "contract": kind,
        "corpus_hash": corpus_digest,
        "record_count": len(records),
    }
    manifest_path = out_path.with_name(out_path.name + ".manifest.json")
    manifest_path.write_text(
        json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
