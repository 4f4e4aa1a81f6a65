"""Matrix documents: the JSON exchange format used by the CLI.

A document is {"field": "Q" | "Qi" | "Fp", "p": <prime, Fp only>,
"rows": [["19-4i", ...], ...], "name": optional}.  Entries are always
strings in the entry grammar, so outputs are valid inputs.
"""

from __future__ import annotations

import json

from .errors import ParseError
from .fields import Field, field_from_name
from .matrices import Matrix


def field_from_document(doc: dict) -> Field:
    if "field" not in doc:
        raise ParseError("document is missing the 'field' key")
    return field_from_name(doc["field"], doc.get("p"))


def parse_matrix_document(doc: dict) -> Matrix:
    field = field_from_document(doc)
    rows = doc.get("rows")
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise ParseError("'rows' must be a list of lists of entry strings")
    if rows and len({len(r) for r in rows}) != 1:
        raise ParseError("rows are not rectangular")
    return Matrix.from_strings(field, rows)


def matrix_to_document(M: Matrix, name: str | None = None) -> dict:
    doc = {"field": M.field.kind}
    if M.field.kind == "Fp":
        doc["p"] = M.field.p
    if name is not None:
        doc["name"] = name
    doc["rows"] = M.to_strings()
    return doc


def load_matrix(path: str) -> Matrix:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError("%s: invalid JSON (%s)" % (path, exc)) from exc
    return parse_matrix_document(doc)
