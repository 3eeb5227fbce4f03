"""Dimensionality reduction behind a pluggable interface.

The default reducer is plain PCA: deterministic, dependency-free and good
enough as a stand-in for stochastic manifold methods, which are treated as
interchangeable here. Externally reduced vectors can bypass this step.
"""

from __future__ import annotations

import logging
from typing import Protocol

import numpy as np

from ..errors import ValidationError
from .models import EmbeddingSet

log = logging.getLogger(__name__)


class Reducer(Protocol):
    def reduce(self, embeddings: EmbeddingSet, target_dim: int) -> EmbeddingSet: ...


class PCAReducer:
    """Mean-centered projection onto the top principal components.

    Sign convention: each component is flipped so its largest-magnitude
    loading is positive, which makes the projection deterministic.
    """

    def reduce(self, embeddings: EmbeddingSet, target_dim: int) -> EmbeddingSet:
        X = embeddings.matrix
        n, d = X.shape
        if target_dim > d:
            raise ValidationError(f"target_dim {target_dim} exceeds input dim {d}")
        if n < 2:
            raise ValidationError("PCA needs at least 2 rows")
        centered = X - X.mean(axis=0)
        u, s, vt = np.linalg.svd(centered, full_matrices=False)
        if np.allclose(s, 0.0):
            log.warning("zero-variance embeddings; returning centered data")
            return EmbeddingSet(list(embeddings.article_ids), centered[:, :target_dim])
        components = vt[:target_dim]
        for k in range(components.shape[0]):
            j = int(np.argmax(np.abs(components[k])))
            if components[k, j] < 0:
                components[k] = -components[k]
        return EmbeddingSet(list(embeddings.article_ids), centered @ components.T)


def reduce_pca(embeddings: EmbeddingSet, target_dim: int) -> EmbeddingSet:
    return PCAReducer().reduce(embeddings, target_dim)
