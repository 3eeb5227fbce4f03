"""Logical consistency metrics over extracted ontologies, plus pruning.

Three checks, each an accuracy rate of 1 - errors/total over the document
set: objects must instance an existing class, an object name may only occur
once per article, and relationship endpoints must refer to previously
defined objects. Elements failing a check are eliminated by prune(), which
cascades so the survivors are fully consistent.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .models import ObjectDecl, OntologyDocument, RelationshipDecl


@dataclass
class ConsistencyReport:
    object_total: int = 0
    relationship_total: int = 0
    object_class_errors: list[dict] = field(default_factory=list)
    object_object_errors: list[dict] = field(default_factory=list)
    object_relation_errors: list[dict] = field(default_factory=list)

    def _rate(self, errors: list, total: int) -> float:
        return 1.0 - len(errors) / total if total > 0 else 1.0

    @property
    def object_class_rate(self) -> float:
        return self._rate(self.object_class_errors, self.object_total)

    @property
    def object_object_rate(self) -> float:
        return self._rate(self.object_object_errors, self.object_total)

    @property
    def object_relation_rate(self) -> float:
        return self._rate(self.object_relation_errors, self.relationship_total)

    def to_dict(self) -> dict:
        return {
            "object_total": self.object_total,
            "relationship_total": self.relationship_total,
            "object_class_rate": round(self.object_class_rate, 6),
            "object_object_rate": round(self.object_object_rate, 6),
            "object_relation_rate": round(self.object_relation_rate, 6),
            "object_class_errors": self.object_class_errors,
            "object_object_errors": self.object_object_errors,
            "object_relation_errors": self.object_relation_errors,
        }


def check_consistency(documents: list[OntologyDocument]) -> ConsistencyReport:
    report = ConsistencyReport()
    for doc in documents:
        if doc.failed:
            continue
        classes = set(doc.class_names)
        seen: set[str] = set()
        for obj in doc.objects:
            report.object_total += 1
            if obj.instance_of not in classes:
                report.object_class_errors.append(
                    {"article_id": doc.article_id, "object": obj.name,
                     "unknown_class": obj.instance_of}
                )
            if obj.name in seen:
                report.object_object_errors.append(
                    {"article_id": doc.article_id, "object": obj.name}
                )
            seen.add(obj.name)
        names = {o.name for o in doc.objects}
        for rel in doc.relationships:
            report.relationship_total += 1
            missing = [e for e in (rel.from_object, rel.to_object) if e not in names]
            if missing:
                report.object_relation_errors.append(
                    {"article_id": doc.article_id, "relationship": rel.name,
                     "missing": missing}
                )
    return report


def prune(documents: list[OntologyDocument]) -> list[OntologyDocument]:
    """Drop inconsistent elements: objects with unknown classes, duplicate
    objects after the first, then relationships with missing endpoints.
    Idempotent; a second pass changes nothing."""
    out = []
    for doc in documents:
        if doc.failed:
            out.append(doc)
            continue
        classes = set(doc.class_names)
        kept_objects: list[ObjectDecl] = []
        seen: set[str] = set()
        for obj in doc.objects:
            if obj.instance_of not in classes or obj.name in seen:
                continue
            seen.add(obj.name)
            kept_objects.append(obj)
        names = {o.name for o in kept_objects}
        kept_rels: list[RelationshipDecl] = [
            rel
            for rel in doc.relationships
            if rel.from_object in names and rel.to_object in names
        ]
        out.append(
            OntologyDocument(
                article_id=doc.article_id,
                class_names=list(doc.class_names),
                objects=kept_objects,
                relationships=kept_rels,
                raw_reply=doc.raw_reply,
                attempt_count=doc.attempt_count,
                failed=doc.failed,
            )
        )
    return out
