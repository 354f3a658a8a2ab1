"""JSON table files.

A table file is::

    {"elements": [names...], "identity": name,
     "inverse": {name: name, ...}, "products": [[x, y, xy], ...]}

Group files have the same shape; their products must be total and
``inverse`` may be omitted.  Serialization is canonical: keys sorted, the
inverse map in element order, products sorted by element index, so
serialize(parse(serialize(t))) is byte-identical to serialize(t).
"""

from __future__ import annotations

import json
from pathlib import Path

from .factory import FiniteGroup, group_from_table
from .table import PregroupTable, TableError, new_table

__all__ = [
    "TableFileError",
    "parse_table",
    "serialize_table",
    "parse_group",
    "serialize_group",
    "load_table",
    "load_group",
]

_KEYS = {"elements", "identity", "inverse", "products"}


class TableFileError(ValueError):
    pass


def _no_duplicate_keys(pairs):
    out = {}
    for k, v in pairs:
        if k in out:
            raise TableFileError(f"duplicate key {k!r}")
        out[k] = v
    return out


def _load_doc(data: bytes | str, required: set[str]) -> dict:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise TableFileError(f"not UTF-8: {exc}") from None
    try:
        doc = json.loads(data, object_pairs_hook=_no_duplicate_keys)
    except json.JSONDecodeError as exc:
        raise TableFileError(f"malformed JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise TableFileError("top level must be an object")
    unknown = sorted(set(doc) - _KEYS)
    if unknown:
        raise TableFileError(f"unknown key {unknown[0]!r}")
    for key in sorted(required):
        if key not in doc:
            raise TableFileError(f"missing key {key!r}")

    elements = doc["elements"]
    if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
        raise TableFileError("'elements' must be a list of strings")
    if not isinstance(doc["identity"], str):
        raise TableFileError("'identity' must be a string")
    inverse = doc.get("inverse", {})
    if not isinstance(inverse, dict) or not all(isinstance(v, str) for v in inverse.values()):
        raise TableFileError("'inverse' must be an object of strings")
    products = doc["products"]
    if not isinstance(products, list):
        raise TableFileError("'products' must be a list")
    seen = set()
    for i, entry in enumerate(products):
        if not (isinstance(entry, list) and len(entry) == 3 and all(isinstance(e, str) for e in entry)):
            raise TableFileError(f"products[{i}] must be a list of three names")
        if tuple(entry[:2]) in seen:
            raise TableFileError(f"products[{i}] duplicates the pair ({entry[0]}, {entry[1]})")
        seen.add(tuple(entry[:2]))
    return doc


def parse_table(data: bytes | str) -> PregroupTable:
    doc = _load_doc(data, _KEYS)
    try:
        return new_table(doc["elements"], doc["identity"], doc["inverse"], map(tuple, doc["products"]))
    except TableError as exc:
        raise TableFileError(str(exc)) from None


def _dump(elements, identity, inverse, triples) -> bytes:
    lines = ["{"]
    lines.append(f'  "elements": {json.dumps(list(elements), ensure_ascii=False)},')
    lines.append(f'  "identity": {json.dumps(identity, ensure_ascii=False)},')
    if inverse is not None:
        inv = ", ".join(
            f"{json.dumps(k, ensure_ascii=False)}: {json.dumps(v, ensure_ascii=False)}"
            for k, v in inverse
        )
        lines.append(f'  "inverse": {{{inv}}},')
    if triples:
        lines.append('  "products": [')
        body = [f"    {json.dumps(list(tr), ensure_ascii=False)}" for tr in triples]
        lines.append(",\n".join(body))
        lines.append("  ]")
    else:
        lines.append('  "products": []')
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def serialize_table(t: PregroupTable) -> bytes:
    inverse = [(t.name(x), t.name(t.inv(x))) for x in t.elements]
    return _dump(t.names, t.name(t.identity), inverse, t.triples())


def parse_group(data: bytes | str) -> FiniteGroup:
    doc = _load_doc(data, {"elements", "identity", "products"})
    n = len(doc["elements"])
    if len(doc["products"]) != n * n:
        raise TableFileError(f"group products must be total: {len(doc['products'])} of {n * n} entries")
    g = group_from_table(doc["elements"], doc["identity"], map(tuple, doc["products"]))
    for name, inv in doc.get("inverse", {}).items():
        if g.names[g.inv(g.index(name))] != inv:
            raise TableFileError(f"'inverse' entry for {name!r} disagrees with the products")
    return g


def serialize_group(g: FiniteGroup) -> bytes:
    inverse = [(g.names[x], g.names[g.inv(x)]) for x in g.elements]
    return _dump(g.names, g.names[g.identity], inverse, g.triples())


def load_table(path: str | Path) -> PregroupTable:
    return parse_table(Path(path).read_bytes())


def load_group(path: str | Path) -> FiniteGroup:
    return parse_group(Path(path).read_bytes())
