"""Data types for document embeddings and the density-cluster hierarchy."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ..errors import ValidationError

NOISE = -1


@dataclass
class EmbeddingSet:
    """Ordered article ids plus an n x d matrix of finite float vectors."""

    article_ids: list[str]
    matrix: np.ndarray

    def __post_init__(self):
        self.matrix = np.asarray(self.matrix, dtype=np.float64)
        if self.matrix.ndim != 2:
            raise ValidationError("embedding matrix must be 2-D")
        if self.matrix.shape[0] != len(self.article_ids):
            raise ValidationError(
                f"{len(self.article_ids)} ids but {self.matrix.shape[0]} embedding rows"
            )
        if not np.isfinite(self.matrix).all():
            raise ValidationError("embeddings contain non-finite values")

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    @property
    def dim(self) -> int:
        return self.matrix.shape[1]

    @classmethod
    def load(cls, path: str | Path) -> "EmbeddingSet":
        """Read either the JSONL contract or the binary manifest variant."""
        path = Path(path)
        if path.suffix == ".json":
            return cls.from_binary_manifest(path)
        return cls.from_jsonl(path)

    @classmethod
    def from_binary_manifest(cls, manifest_path: str | Path) -> "EmbeddingSet":
        """Binary variant: little-endian float32 rows described by a JSON
        manifest {dim, count, id_file, vector_file?}. The id file carries one
        article id per line; vector_file defaults to <manifest>.f32."""
        manifest_path = Path(manifest_path)
        manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
        dim, count = int(manifest["dim"]), int(manifest["count"])
        id_file = manifest_path.parent / manifest["id_file"]
        vector_file = manifest_path.parent / manifest.get(
            "vector_file", manifest_path.stem + ".f32"
        )
        ids = [
            line.strip()
            for line in id_file.read_text(encoding="utf-8").splitlines()
            if line.strip()
        ]
        if len(ids) != count:
            raise ValidationError(
                f"{id_file}: {len(ids)} ids but manifest says {count}"
            )
        raw = np.fromfile(vector_file, dtype="<f4")
        if raw.size != count * dim:
            raise ValidationError(
                f"{vector_file}: {raw.size} floats, expected {count}x{dim}"
            )
        return cls(ids, raw.reshape(count, dim).astype(np.float64))

    @classmethod
    def from_jsonl(cls, path: str | Path) -> "EmbeddingSet":
        ids: list[str] = []
        rows: list[list[float]] = []
        dim = None
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                rec = json.loads(line)
                vec = rec["vector"]
                if dim is None:
                    dim = len(vec)
                elif len(vec) != dim:
                    raise ValidationError(
                        f"{path}:{lineno}: vector length {len(vec)} != {dim}"
                    )
                ids.append(str(rec["article_id"]))
                rows.append(vec)
        if not ids:
            raise ValidationError(f"{path}: no embeddings found")
        return cls(ids, np.array(rows, dtype=np.float64))


@dataclass
class CondensedNode:
    """One cluster node of the condensed hierarchy.

    lambda values are reciprocal merge distances (1/distance); a node is born
    when it splits off its parent and dies when it splits again or dissolves.
    """

    node_id: int
    parent_id: int | None
    lambda_birth: float
    lambda_death: float
    size: int
    stability: float

    def to_dict(self) -> dict:
        return {
            "node_id": self.node_id,
            "parent_id": self.parent_id,
            "lambda_birth": self.lambda_birth,
            "lambda_death": self.lambda_death,
            "size": self.size,
            "stability": self.stability,
        }


@dataclass
class CondensedTree:
    """Condensed cluster hierarchy plus per-point fall-out records.

    point_parent[i] is the cluster node that point i last belonged to and
    point_lambda[i] the density level at which it left that node.
    """

    n_points: int
    nodes: dict[int, CondensedNode]
    point_parent: np.ndarray
    point_lambda: np.ndarray

    @property
    def root_id(self) -> int:
        roots = [n.node_id for n in self.nodes.values() if n.parent_id is None]
        if len(roots) != 1:
            raise ValidationError(f"condensed tree has {len(roots)} roots")
        return roots[0]

    def children(self, node_id: int) -> list[int]:
        return sorted(
            n.node_id for n in self.nodes.values() if n.parent_id == node_id
        )

    def to_dict(self) -> dict:
        return {
            "n_points": self.n_points,
            "nodes": [self.nodes[k].to_dict() for k in sorted(self.nodes)],
            "point_parent": self.point_parent.tolist(),
            "point_lambda": [
                None if np.isinf(v) else v for v in self.point_lambda.tolist()
            ],
        }


@dataclass
class ClusterAssignment:
    """Final flat clustering: one integer label per article, -1 for noise."""

    article_ids: list[str]
    labels: np.ndarray
    strengths: np.ndarray
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        self.labels = np.asarray(self.labels, dtype=np.int64)
        self.strengths = np.asarray(self.strengths, dtype=np.float64)
        if not (len(self.article_ids) == len(self.labels) == len(self.strengths)):
            raise ValidationError("assignment arrays must have equal length")

    def cluster_ids(self) -> list[int]:
        return sorted(int(c) for c in set(self.labels.tolist()) if c != NOISE)

    def members(self, cluster_id: int) -> list[str]:
        return [
            aid
            for aid, lab in zip(self.article_ids, self.labels.tolist())
            if lab == cluster_id
        ]

    def to_records(self) -> list[dict]:
        return [
            {
                "article_id": aid,
                "cluster_id": int(lab),
                "strength": round(float(s), 6),
            }
            for aid, lab, s in zip(
                self.article_ids, self.labels.tolist(), self.strengths.tolist()
            )
        ]
