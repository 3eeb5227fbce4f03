"""Red-flag checks for degenerate clustering results."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import ValidationError
from .models import NOISE, ClusterAssignment

NOISE_THRESHOLD = 0.30
DOMINANCE_THRESHOLD = 0.30


@dataclass
class QualityReport:
    noise_fraction: float
    largest_cluster_fraction: float
    cluster_count: int
    flags: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "noise_fraction": round(self.noise_fraction, 6),
            "largest_cluster_fraction": round(self.largest_cluster_fraction, 6),
            "cluster_count": self.cluster_count,
            "flags": list(self.flags),
        }


def quality_report(
    assignment: ClusterAssignment,
    noise_threshold: float = NOISE_THRESHOLD,
    dominance_threshold: float = DOMINANCE_THRESHOLD,
) -> QualityReport:
    """Flag too much noise or one cluster swallowing the corpus."""
    labels = assignment.labels
    n = len(labels)
    if n == 0:
        raise ValidationError("assignment is empty")
    noise_fraction = float(np.count_nonzero(labels == NOISE)) / n
    cluster_sizes = [
        int(np.count_nonzero(labels == c)) for c in assignment.cluster_ids()
    ]
    largest = max(cluster_sizes) / n if cluster_sizes else 0.0
    flags = []
    if noise_fraction > noise_threshold:
        flags.append("high_noise")
    if largest > dominance_threshold:
        flags.append("dominant_cluster")
    return QualityReport(noise_fraction, largest, len(cluster_sizes), flags)
