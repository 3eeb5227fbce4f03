"""Prompt template for per-article ontology extraction.

The template is fixed verbatim, including the stray colon inside the
"Class:" key of the schema block; downstream parsing tolerates replies using
either spelling. The article is appended as title, blank line, body.
"""

from __future__ import annotations

from ..corpus.models import Article

PROMPT_TEMPLATE = """\
Your task is to create an ontology for a given news article. The ontology consists of the following elements:
    - Classes: are the main formalized element of the article
    - Objects: are the representation of the main objects of the article and represent instances of a class
    - Relationships: are links or relationships between the objects for representing the ontology structure
Please answer in the following JSON format:
{
    "Class:" ["ClassName"],
    "Object": [{
        "Name": "ObjectName",
        "InstanceOf": "Class"
    }],
    "Relationship": {
        "RelationshipName": {
            "RelationshipFrom": "ObjectName",
            "RelationshipTo": "ObjectName"
        }
    }
}
Please consider that "RelationshipName" should be an active verb and optionally contain a preposition.
Please create an ontology of the following article:
"""


def build_prompt(article: Article, body: str | None = None) -> str:
    """Template, then title, a blank line, and the (cleaned) body."""
    text = body if body is not None else article.body
    return f"{PROMPT_TEMPLATE}{article.title}\n\n{text}"
