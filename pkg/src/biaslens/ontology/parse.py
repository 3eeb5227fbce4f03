"""Tolerant parsing of model replies into ontology elements.

Replies arrive as free text around a JSON object. Markdown fences and any
prose before the first brace are stripped. The Relationship member may be an
object of objects, where duplicate keys are legal and preserved as separate
relationships, or an array. Class accepts a string or an array and either
the "Class" or the schema block's literal "Class:" spelling.
"""

from __future__ import annotations

import json
import re

from .models import ObjectDecl, OntologyDocument, RelationshipDecl

_FENCE_RE = re.compile(r"^```[a-zA-Z]*\s*$", re.MULTILINE)

Pairs = list[tuple[str, object]]


class ParseError(ValueError):
    pass


def _strip_fences(text: str) -> str:
    return _FENCE_RE.sub("", text)


def _decode_first_object(text: str) -> Pairs:
    """Decode the first parseable JSON object, keeping duplicate keys."""
    decoder = json.JSONDecoder(object_pairs_hook=lambda pairs: pairs)
    attempts = 0
    pos = text.find("{")
    while pos != -1 and attempts < 20:
        try:
            value, _ = decoder.raw_decode(text[pos:])
        except json.JSONDecodeError:
            attempts += 1
            pos = text.find("{", pos + 1)
            continue
        if isinstance(value, list):  # object decoded to pairs
            return value
        attempts += 1
        pos = text.find("{", pos + 1)
    raise ParseError("no JSON object found in reply")


def _get(pairs: Pairs, *names: str) -> object | None:
    wanted = {n.lower() for n in names}
    for key, value in pairs:
        if isinstance(key, str) and key.strip().rstrip(":").lower() in wanted:
            return value
    return None


def _as_pairs(value: object) -> Pairs:
    return value if isinstance(value, list) and all(
        isinstance(x, tuple) for x in value
    ) else []


def _parse_classes(value: object) -> list[str]:
    if value is None:
        return []
    if isinstance(value, str):
        return [value]
    if isinstance(value, list) and not _as_pairs(value):
        return [str(v) for v in value if isinstance(v, (str, int, float))]
    return []


def _parse_objects(value: object) -> list[ObjectDecl]:
    out: list[ObjectDecl] = []
    if value is None:
        return out
    entries = value if isinstance(value, list) else [value]
    for entry in entries:
        pairs = _as_pairs(entry)
        if not pairs:
            continue
        name = _get(pairs, "Name", "Object", "ObjectName")
        instance_of = _get(pairs, "InstanceOf", "Instance_of", "Class")
        if isinstance(name, str):
            out.append(
                ObjectDecl(name=name, instance_of=str(instance_of or ""))
            )
    return out


def _parse_relationships(value: object) -> list[RelationshipDecl]:
    out: list[RelationshipDecl] = []
    if value is None:
        return out
    pairs = _as_pairs(value)
    if pairs and all(isinstance(v, list) for _, v in pairs):
        # object-of-objects: {"name": {"RelationshipFrom":..., "RelationshipTo":...}}
        for name, inner in pairs:
            rel = _relationship_from(str(name), _as_pairs(inner))
            if rel:
                out.append(rel)
        return out
    entries = value if isinstance(value, list) else []
    for entry in entries:
        inner = _as_pairs(entry)
        if not inner:
            continue
        name = _get(inner, "RelationshipName", "Name")
        if isinstance(name, str):
            rel = _relationship_from(name, inner)
            if rel:
                out.append(rel)
        elif len(inner) == 1 and isinstance(inner[0][1], list):
            # array of single-key objects: [{"attacks": {...}}]
            rel = _relationship_from(str(inner[0][0]), _as_pairs(inner[0][1]))
            if rel:
                out.append(rel)
    return out


def _relationship_from(name: str, pairs: Pairs) -> RelationshipDecl | None:
    src = _get(pairs, "RelationshipFrom", "From")
    dst = _get(pairs, "RelationshipTo", "To")
    if isinstance(src, str) and isinstance(dst, str):
        return RelationshipDecl(name=name, from_object=src, to_object=dst)
    return None


def parse_reply(text: str, article_id: str = "") -> OntologyDocument:
    """Parse one reply; raises ParseError when no JSON object is present."""
    pairs = _decode_first_object(_strip_fences(text))
    return OntologyDocument(
        article_id=article_id,
        class_names=_parse_classes(_get(pairs, "Class", "Classes")),
        objects=_parse_objects(_get(pairs, "Object", "Objects")),
        relationships=_parse_relationships(
            _get(pairs, "Relationship", "Relationships")
        ),
        raw_reply=text,
    )
