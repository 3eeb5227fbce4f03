from .models import ClusterAssignment, CondensedTree, CondensedNode, EmbeddingSet
from .reduce import PCAReducer, Reducer, reduce_pca
from .density import (
    core_distances,
    extract_clusters,
    hdbscan_fit,
    mutual_reachability,
    single_linkage,
)
from .quality import QualityReport, quality_report

__all__ = [
    "ClusterAssignment",
    "CondensedTree",
    "CondensedNode",
    "EmbeddingSet",
    "PCAReducer",
    "Reducer",
    "reduce_pca",
    "core_distances",
    "mutual_reachability",
    "single_linkage",
    "hdbscan_fit",
    "extract_clusters",
    "QualityReport",
    "quality_report",
]
