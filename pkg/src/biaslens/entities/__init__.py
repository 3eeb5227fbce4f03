from .mentions import (
    EntityMention,
    EntitySentiment,
    MentionSet,
    load_entity_sentiments,
    load_mentions,
)
from .sentences import sentence_index
from .contexts import TargetContext, make_context
from .stats import entity_newspaper_stats, top_entities

__all__ = [
    "EntityMention",
    "EntitySentiment",
    "MentionSet",
    "load_mentions",
    "load_entity_sentiments",
    "sentence_index",
    "TargetContext",
    "make_context",
    "top_entities",
    "entity_newspaper_stats",
]
