from .tokenize import STOPWORDS, tokenize
from .ctfidf import ctfidf_weights
from .tree import (
    TopicRecord,
    TopicTree,
    build_base_topics,
    build_hierarchy,
    merge_single_source_topics,
)

__all__ = [
    "STOPWORDS",
    "tokenize",
    "ctfidf_weights",
    "TopicRecord",
    "TopicTree",
    "build_base_topics",
    "build_hierarchy",
    "merge_single_source_topics",
]
