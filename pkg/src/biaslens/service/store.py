"""Content-addressed project store.

Every pipeline stage writes plain JSON/JSONL files into its own directory
under the project root, then records a content hash in the manifest together
with the upstream hashes and the config subset it read. A stage is stale
when any of those recorded values no longer match, which pins down exactly
which config keys invalidate which stages. Writes go to a staging directory
and are swapped in atomically; nothing is timestamped, so identical inputs
produce byte-identical stores.
"""

from __future__ import annotations

import hashlib
import json
import os
import shutil
from pathlib import Path

from ..errors import MissingUpstreamError, StaleUpstreamError, ValidationError

MANIFEST = "manifest.json"

DEFAULT_CONFIG = {
    "keep_language": "en",
    "target_dim": 5,
    "min_cluster_size": 10,
    "min_samples": None,
    "noise_threshold": 0.30,
    "dominance_threshold": 0.30,
    "terms_per_topic": 10,
    "context_mode": "auto",
    "top_k_entities": 10,
    "include_zero_coverage": False,
}

# stage -> (upstream stages, config keys the stage reads)
STAGES: dict[str, tuple[tuple[str, ...], tuple[str, ...]]] = {
    "corpus": ((), ()),
    "clean": (("corpus",), ("keep_language",)),
    "clusters": (
        ("clean",),
        ("target_dim", "min_cluster_size", "min_samples",
         "noise_threshold", "dominance_threshold"),
    ),
    "topics": (("clusters",), ("terms_per_topic",)),
    "scores": (("clean",), ()),
    "entities": (("clean",), ()),
    "contexts": (("entities",), ("context_mode",)),
    "ontology": (("clean",), ()),
    "metrics": (
        ("topics", "scores", "entities"),
        ("top_k_entities", "include_zero_coverage"),
    ),
}

REBUILD_COMMANDS = {
    "corpus": "biaslens ingest --articles articles.jsonl --newspapers newspapers.json",
    "clean": "biaslens clean",
    "clusters": "biaslens cluster --embeddings embeddings.jsonl",
    "topics": "biaslens topics",
    "scores": "biaslens score-load --baseline",
    "entities": "biaslens entities-load --file entities.jsonl",
    "contexts": "biaslens contexts-export",
    "ontology": "biaslens ontology-extract",
    "metrics": "biaslens metrics",
}


def _hash_dir(path: Path) -> str:
    h = hashlib.sha256()
    for file in sorted(path.rglob("*")):
        if file.is_file():
            h.update(str(file.relative_to(path)).encode())
            h.update(b"\0")
            h.update(file.read_bytes())
            h.update(b"\0")
    return h.hexdigest()


class ProjectStore:
    def __init__(self, root: str | Path):
        self.root = Path(root)

    # -- manifest ----------------------------------------------------------

    @property
    def manifest_path(self) -> Path:
        return self.root / MANIFEST

    def exists(self) -> bool:
        return self.manifest_path.is_file()

    def init(self, name: str, config: dict | None = None) -> None:
        if self.exists():
            raise ValidationError(f"project already initialized at {self.root}")
        self.root.mkdir(parents=True, exist_ok=True)
        manifest = {
            "project": name,
            "config": {**DEFAULT_CONFIG, **(config or {})},
            "stages": {},
        }
        self._write_manifest(manifest)

    def manifest(self) -> dict:
        if not self.exists():
            raise MissingUpstreamError(
                f"no project at {self.root}; run `biaslens init` first"
            )
        return json.loads(self.manifest_path.read_text(encoding="utf-8"))

    def _write_manifest(self, manifest: dict) -> None:
        tmp = self.manifest_path.with_suffix(".tmp")
        tmp.write_text(
            json.dumps(manifest, indent=2, sort_keys=True, ensure_ascii=False) + "\n",
            encoding="utf-8",
        )
        os.replace(tmp, self.manifest_path)

    def config(self) -> dict:
        return self.manifest()["config"]

    def set_config(self, updates: dict) -> None:
        manifest = self.manifest()
        unknown = set(updates) - set(DEFAULT_CONFIG)
        if unknown:
            raise ValidationError(f"unknown config keys: {sorted(unknown)}")
        manifest["config"].update(updates)
        self._write_manifest(manifest)

    # -- stage state -------------------------------------------------------

    def stage_dir(self, stage: str) -> Path:
        return self.root / stage

    def stage_hash(self, stage: str) -> str | None:
        entry = self.manifest()["stages"].get(stage)
        return entry["hash"] if entry else None

    def stage_status(self, stage: str) -> str:
        """'missing', 'stale' or 'fresh'."""
        manifest = self.manifest()
        entry = manifest["stages"].get(stage)
        if entry is None or not self.stage_dir(stage).is_dir():
            return "missing"
        upstream, config_keys = STAGES[stage]
        for up in upstream:
            up_entry = manifest["stages"].get(up)
            if up_entry is None:
                return "stale"
            if entry["upstream"].get(up) != up_entry["hash"]:
                return "stale"
        current_cfg = {k: manifest["config"].get(k) for k in config_keys}
        if entry["config"] != current_cfg:
            return "stale"
        return "fresh"

    def require_fresh(self, *stages: str) -> None:
        for stage in stages:
            status = self.stage_status(stage)
            if status == "missing":
                raise MissingUpstreamError(
                    f"stage '{stage}' has not been built; run: {REBUILD_COMMANDS[stage]}"
                )
            if status == "stale":
                raise StaleUpstreamError(stage, REBUILD_COMMANDS[stage])

    # -- stage writes ------------------------------------------------------

    def write_stage(self, stage: str, files: dict[str, str | bytes]) -> str:
        """Write a stage's files atomically and record it in the manifest.

        `files` maps relative paths to contents. Returns the stage hash.
        """
        if stage not in STAGES:
            raise ValidationError(f"unknown stage {stage!r}")
        upstream, config_keys = STAGES[stage]
        manifest = self.manifest()
        for up in upstream:
            if up not in manifest["stages"]:
                raise MissingUpstreamError(
                    f"stage '{stage}' needs '{up}' first; run: {REBUILD_COMMANDS[up]}"
                )
        staging = self.root / f".{stage}.staging"
        if staging.exists():
            shutil.rmtree(staging)
        staging.mkdir(parents=True)
        for rel, content in files.items():
            target = staging / rel
            target.parent.mkdir(parents=True, exist_ok=True)
            if isinstance(content, bytes):
                target.write_bytes(content)
            else:
                target.write_text(content, encoding="utf-8")
        final = self.stage_dir(stage)
        if final.exists():
            shutil.rmtree(final)
        os.replace(staging, final)
        stage_hash = _hash_dir(final)
        manifest["stages"][stage] = {
            "hash": stage_hash,
            "upstream": {up: manifest["stages"][up]["hash"] for up in upstream},
            "config": {k: manifest["config"].get(k) for k in config_keys},
        }
        # stages built before this one with this stage upstream are now stale
        self._write_manifest(manifest)
        return stage_hash

    # -- reads -------------------------------------------------------------

    def read_json(self, stage: str, rel: str):
        path = self.stage_dir(stage) / rel
        if not path.is_file():
            raise MissingUpstreamError(f"missing artifact {stage}/{rel}")
        return json.loads(path.read_text(encoding="utf-8"))

    def read_jsonl(self, stage: str, rel: str) -> list[dict]:
        path = self.stage_dir(stage) / rel
        if not path.is_file():
            raise MissingUpstreamError(f"missing artifact {stage}/{rel}")
        out = []
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    out.append(json.loads(line))
        return out

    def artifact_path(self, stage: str, rel: str) -> Path:
        return self.stage_dir(stage) / rel


def jsonl(records) -> str:
    return "".join(
        json.dumps(r, ensure_ascii=False, sort_keys=True) + "\n" for r in records
    )


def pretty(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
