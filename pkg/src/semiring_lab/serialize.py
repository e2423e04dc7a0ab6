"""JSON file format for semirings.

    {"name": str?, "order": n, "zero": i, "one": j,
     "add": [[...], ...], "mul": [[...], ...], "labels": [str, ...]?}

Tables are row-major integer lists.  ``labels`` is an optional extension
used for display only.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import jsonschema

from .core import FiniteSemiring, SemiringStructureError, validate_axioms, AxiomReport

_TABLE = {
    "type": "array",
    "minItems": 1,
    "items": {"type": "array", "items": {"type": "integer", "minimum": 0}},
}

SEMIRING_SCHEMA = {
    "type": "object",
    "required": ["order", "zero", "one", "add", "mul"],
    "additionalProperties": False,
    "properties": {
        "name": {"type": "string"},
        "order": {"type": "integer", "minimum": 1},
        "zero": {"type": "integer", "minimum": 0},
        "one": {"type": "integer", "minimum": 0},
        "add": _TABLE,
        "mul": _TABLE,
        "labels": {"type": "array", "items": {"type": "string"}},
    },
}


class SchemaError(ValueError):
    """Input does not parse or does not match the semiring JSON schema.

    ``position`` is a human-readable location: ``line L column C`` for parse
    errors, a JSON path such as ``add[1][2]`` for schema errors.
    """

    def __init__(self, message: str, position: str = "") -> None:
        self.message = message
        self.position = position
        super().__init__(f"{position}: {message}" if position else message)


def _json_path(parts) -> str:
    out = ""
    for p in parts:
        out += f"[{p}]" if isinstance(p, int) else (f".{p}" if out else str(p))
    return out or "<root>"


def parse_document(text: str) -> dict[str, Any]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(e.msg, f"line {e.lineno} column {e.colno}") from e
    errors = sorted(jsonschema.Draft7Validator(SEMIRING_SCHEMA).iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        raise SchemaError(err.message, _json_path(err.absolute_path))
    n = doc["order"]
    for key in ("add", "mul"):
        if len(doc[key]) != n:
            raise SchemaError(f"expected {n} rows", key)
        for i, row in enumerate(doc[key]):
            if len(row) != n:
                raise SchemaError(f"expected {n} entries", f"{key}[{i}]")
            for j, v in enumerate(row):
                if v >= n:
                    raise SchemaError(f"entry {v} out of range", f"{key}[{i}][{j}]")
    for key in ("zero", "one"):
        if doc[key] >= n:
            raise SchemaError(f"index {doc[key]} out of range", key)
    if "labels" in doc and len(doc["labels"]) != n:
        raise SchemaError(f"expected {n} labels", "labels")
    return doc


def check_document(doc: dict[str, Any]) -> AxiomReport:
    return validate_axioms(doc["add"], doc["mul"], doc["zero"], doc["one"])


def from_dict(doc: dict[str, Any]) -> FiniteSemiring:
    try:
        return FiniteSemiring(
            doc["add"], doc["mul"], doc["zero"], doc["one"],
            name=doc.get("name", ""), labels=tuple(doc.get("labels", ())),
        )
    except SemiringStructureError as e:
        raise SchemaError(str(e)) from e


def loads(text: str) -> FiniteSemiring:
    return from_dict(parse_document(text))


def load(path: str | Path) -> FiniteSemiring:
    return loads(Path(path).read_text(encoding="utf-8"))


def to_dict(S: FiniteSemiring, labels: bool = True) -> dict[str, Any]:
    doc: dict[str, Any] = {}
    if S.name:
        doc["name"] = S.name
    doc["order"] = S.order
    doc["zero"] = S.zero
    doc["one"] = S.one
    doc["add"] = [list(r) for r in S.add]
    doc["mul"] = [list(r) for r in S.mul]
    if labels:
        doc["labels"] = list(S.labels)
    return doc


def dumps(S: FiniteSemiring, indent: int | None = None, labels: bool = True) -> str:
    return json.dumps(to_dict(S, labels=labels), indent=indent, ensure_ascii=False)
