"""Parsed ontology elements extracted per article."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class ObjectDecl:
    name: str
    instance_of: str

    def to_dict(self) -> dict:
        return {"name": self.name, "instance_of": self.instance_of}


@dataclass(frozen=True)
class RelationshipDecl:
    name: str
    from_object: str
    to_object: str

    def to_dict(self) -> dict:
        return {"name": self.name, "from": self.from_object, "to": self.to_object}


@dataclass
class OntologyDocument:
    """One article's extraction result; the raw reply is kept verbatim even
    when parsing failed so a human can audit what the model said."""

    article_id: str
    class_names: list[str] = field(default_factory=list)
    objects: list[ObjectDecl] = field(default_factory=list)
    relationships: list[RelationshipDecl] = field(default_factory=list)
    raw_reply: str = ""
    attempt_count: int = 0
    failed: bool = False

    def to_dict(self) -> dict:
        return {
            "article_id": self.article_id,
            "class_names": list(self.class_names),
            "objects": [o.to_dict() for o in self.objects],
            "relationships": [r.to_dict() for r in self.relationships],
            "raw_reply": self.raw_reply,
            "attempt_count": self.attempt_count,
            "failed": self.failed,
        }

    @classmethod
    def from_dict(cls, rec: dict) -> "OntologyDocument":
        return cls(
            article_id=str(rec["article_id"]),
            class_names=[str(c) for c in rec.get("class_names", [])],
            objects=[
                ObjectDecl(str(o["name"]), str(o["instance_of"]))
                for o in rec.get("objects", [])
            ],
            relationships=[
                RelationshipDecl(str(r["name"]), str(r["from"]), str(r["to"]))
                for r in rec.get("relationships", [])
            ],
            raw_reply=rec.get("raw_reply", ""),
            attempt_count=int(rec.get("attempt_count", 0)),
            failed=bool(rec.get("failed", False)),
        )
