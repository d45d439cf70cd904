"""JSON matroid documents.

A document is one JSON object in exactly one of three shapes::

    {"ground_set": [1, 2], "independent_sets": [[], [1], [2]]}
    {"ground_set": [1, 2], "bases": [[1], [2]]}
    {"vertices": 2, "edges": [[0, 1, 1], [0, 1, 2]]}

An optional ``"name"`` string is carried through unchanged.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .errors import DocumentError
from .matroid import Matroid, bases, from_bases, from_graph, from_independent_sets

__all__ = [
    "MatroidDocument",
    "parse_document",
    "load_document",
    "load_matroid",
    "normalize",
    "serialize",
    "document_from_matroid",
    "document_from_graph",
]

_SHAPES = {
    "independent_sets": ("ground_set", "independent_sets"),
    "bases": ("ground_set", "bases"),
    "graph": ("vertices", "edges"),
}


@dataclass(frozen=True)
class MatroidDocument:
    form: str  # "independent_sets", "bases" or "graph"
    ground_set: tuple[int, ...] = ()
    family: tuple[tuple[int, ...], ...] = ()
    vertices: int = 0
    edges: tuple[tuple[int, int, int], ...] = ()
    name: str | None = None

    def to_matroid(self) -> Matroid:
        if self.form == "independent_sets":
            return from_independent_sets(self.ground_set, self.family)
        if self.form == "bases":
            return from_bases(self.ground_set, self.family)
        return from_graph(self.vertices, self.edges)


def _line_of(text: str, key: str) -> int | None:
    at = text.find(f'"{key}"')
    return text.count("\n", 0, at) + 1 if at >= 0 else None


def _int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"{where}: expected an integer, got {json.dumps(value)}")
    return value


def _int_list(value: Any, where: str) -> tuple[int, ...]:
    if not isinstance(value, list):
        raise DocumentError(f"{where}: expected a list of integers, got {json.dumps(value)}")
    return tuple(_int(v, f"{where}[{i}]") for i, v in enumerate(value))


def parse_document(text: str, source: str = "<document>") -> MatroidDocument:
    """Parse document text. Errors name the source, line and field."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{source}: line {exc.lineno}, column {exc.colno}: invalid JSON: {exc.msg}") from None
    if not isinstance(obj, dict):
        raise DocumentError(f"{source}: a matroid document must be a JSON object")
    forms = [f for f, (_, key) in _SHAPES.items() if key in obj]
    if len(forms) != 1:
        keys = ", ".join(f"'{k}'" for _, k in _SHAPES.values())
        raise DocumentError(f"{source}: expected exactly one of {keys}, found {len(forms)}")
    form = forms[0]
    allowed = set(_SHAPES[form]) | {"name"}
    for key in obj:
        if key not in allowed:
            raise DocumentError(f"{source}: line {_line_of(text, key)}, field '{key}': unexpected for the {form} form")
    for key in _SHAPES[form]:
        if key not in obj:
            raise DocumentError(f"{source}: field '{key}' is required for the {form} form")

    def where(key):
        return f"{source}: line {_line_of(text, key)}, field '{key}'"

    name = obj.get("name")
    if name is not None and not isinstance(name, str):
        raise DocumentError(f"{where('name')}: expected a string")
    if form == "graph":
        vertices = _int(obj["vertices"], where("vertices"))
        if vertices < 0:
            raise DocumentError(f"{where('vertices')}: must be non-negative")
        raw = obj["edges"]
        if not isinstance(raw, list):
            raise DocumentError(f"{where('edges')}: expected a list of [u, v, label] triples")
        edges = []
        for i, e in enumerate(raw):
            triple = _int_list(e, f"{where('edges')}[{i}]")
            if len(triple) != 3:
                raise DocumentError(f"{where('edges')}[{i}]: expected [u, v, label]")
            edges.append(triple)
        return MatroidDocument("graph", vertices=vertices, edges=tuple(edges), name=name)
    fam_key = _SHAPES[form][1]
    ground = _int_list(obj["ground_set"], where("ground_set"))
    raw = obj[fam_key]
    if not isinstance(raw, list):
        raise DocumentError(f"{where(fam_key)}: expected a list of lists")
    family = tuple(_int_list(s, f"{where(fam_key)}[{i}]") for i, s in enumerate(raw))
    return MatroidDocument(form, ground_set=ground, family=family, name=name)


def load_document(path) -> MatroidDocument:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"{path}: cannot read: {exc.strerror}") from None
    return parse_document(text, str(path))


def load_matroid(path) -> Matroid:
    return load_document(path).to_matroid()


def _sorted_family(family) -> list[list[int]]:
    sets = {tuple(sorted(s)) for s in family}
    return [list(s) for s in sorted(sets, key=lambda s: (len(s), s))]


def normalize(obj: dict) -> dict:
    """Normal form of a raw (already JSON-decoded) document: sorted sets, sorted families."""
    out: dict[str, Any] = {}
    if "name" in obj:
        out["name"] = obj["name"]
    if "edges" in obj:
        out["vertices"] = obj["vertices"]
        edges = [[min(u, v), max(u, v), lab] for u, v, lab in obj["edges"]]
        out["edges"] = sorted(edges, key=lambda e: e[2])
        return out
    out["ground_set"] = sorted(set(obj["ground_set"]))
    for key in ("independent_sets", "bases"):
        if key in obj:
            out[key] = _sorted_family(obj[key])
    return out


def _as_dict(doc: MatroidDocument) -> dict:
    out: dict[str, Any] = {}
    if doc.name is not None:
        out["name"] = doc.name
    if doc.form == "graph":
        out["vertices"] = doc.vertices
        out["edges"] = [list(e) for e in doc.edges]
    else:
        out["ground_set"] = list(doc.ground_set)
        out[doc.form] = [list(s) for s in doc.family]
    return normalize(out)


def serialize(doc: MatroidDocument) -> str:
    """Normalized text with one top-level field per line."""
    d = _as_dict(doc)
    body = ",\n".join(f"  {json.dumps(k)}: {json.dumps(v, ensure_ascii=False)}" for k, v in d.items())
    return "{\n" + body + "\n}\n"


def document_from_matroid(m: Matroid, form: str = "independent_sets", name: str | None = None) -> MatroidDocument:
    if form == "independent_sets":
        family = tuple(tuple(sorted(s)) for s in m.independent_sets)
    elif form == "bases":
        family = tuple(tuple(sorted(b)) for b in bases(m))
    else:
        raise ValueError(f"cannot write a matroid in the {form!r} form")
    return MatroidDocument(form, ground_set=m.ground, family=family, name=name)


def document_from_graph(vertices: int, edges, name: str | None = None) -> MatroidDocument:
    return MatroidDocument("graph", vertices=vertices, edges=tuple(tuple(e) for e in edges), name=name)
