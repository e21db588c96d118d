"""Fan and polytope documents (JSON).

Fan document::

    {"dim": 2, "rays": [[1, 0], [0, 1], [-1, -1]],
     "max_cones": [[0, 1], [1, 2], [2, 0]], "complete": true}

``max_cones`` holds 0-based ray indices; ``complete`` is optional and asserts
completeness where it cannot be verified (dimension >= 3).

Polytope document::

    {"dim": 2, "vertices": [[0, 0], [1, 0], [0, 1]]}

Both accept an optional free-text ``note`` field.
"""
from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Any

from .errors import InvalidInput, InvalidRay
from .fan import Fan
from .polytope import LatticePolytope


class DocumentError(InvalidInput):
    """A malformed input document; ``field`` and ``line`` locate the problem."""

    def __init__(self, message: str, field: str | None = None, line: int | None = None):
        where = []
        if field:
            where.append(f"field '{field}'")
        if line:
            where.append(f"line {line}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.field = field
        self.line = line


def _line_of(text: str, field: str) -> int | None:
    m = re.search(r'"%s"\s*:' % re.escape(field), text)
    return text.count("\n", 0, m.start()) + 1 if m else None


def _parse(text: str) -> dict[str, Any]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc.msg}", line=exc.lineno) from exc
    if not isinstance(doc, dict):
        raise DocumentError("top level must be an object", line=1)
    return doc


def _int_rows(doc: dict, text: str, field: str, width: int | None) -> list[list[int]]:
    rows = doc.get(field)
    line = _line_of(text, field)
    if not isinstance(rows, list) or not rows:
        raise DocumentError("expected a non-empty array of integer arrays", field, line)
    out = []
    for k, row in enumerate(rows):
        if not isinstance(row, list) or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in row
        ):
            raise DocumentError(f"entry {k} is not an integer array", field, line)
        if width is not None and len(row) != width:
            raise DocumentError(f"entry {k} has length {len(row)}, expected dim = {width}", field, line)
        out.append(row)
    return out


def _dim(doc: dict, text: str) -> int:
    dim = doc.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise DocumentError("expected a positive integer", "dim", _line_of(text, "dim"))
    return dim


def _check_keys(doc: dict, text: str, allowed: set[str]) -> None:
    for key in doc:
        if key not in allowed:
            raise DocumentError("unknown field", key, _line_of(text, key))


def fan_from_text(text: str) -> Fan:
    doc = _parse(text)
    _check_keys(doc, text, {"dim", "rays", "max_cones", "complete", "note"})
    dim = _dim(doc, text)
    rays = _int_rows(doc, text, "rays", dim)
    cones = _int_rows(doc, text, "max_cones", None)
    complete = doc.get("complete", False)
    if not isinstance(complete, bool):
        raise DocumentError("expected true or false", "complete", _line_of(text, "complete"))
    try:
        return Fan.build(rays, cones, complete=complete)
    except InvalidInput as exc:
        field = "rays" if isinstance(exc, InvalidRay) else "max_cones"
        raise DocumentError(str(exc), field, _line_of(text, field)) from exc


def polytope_from_text(text: str) -> LatticePolytope:
    doc = _parse(text)
    _check_keys(doc, text, {"dim", "vertices", "note"})
    dim = _dim(doc, text)
    verts = _int_rows(doc, text, "vertices", dim)
    try:
        return LatticePolytope.build(verts)
    except InvalidInput as exc:
        raise DocumentError(str(exc), "vertices", _line_of(text, "vertices")) from exc


def load_fan(path: str | Path) -> Fan:
    return fan_from_text(Path(path).read_text(encoding="utf-8"))


def load_polytope(path: str | Path) -> LatticePolytope:
    return polytope_from_text(Path(path).read_text(encoding="utf-8"))


def fan_document(f: Fan) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "dim": f.dim,
        "rays": [list(r) for r in f.rays],
        "max_cones": [list(c) for c in f.max_cones],
    }
    if f.complete_asserted:
        doc["complete"] = True
    return doc


def polytope_document(P: LatticePolytope) -> dict[str, Any]:
    return {"dim": P.dim, "vertices": [list(v) for v in P.vertices]}
