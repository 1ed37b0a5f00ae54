"""JSON documents and DOT export: the only serialization boundary.

One document carries a complex (cube records), an optional automaton
block (initial, final, labels), and an optional subdivision block whose
source is a full embedded document; the top-level complex is then the
subdivision target.  Grid cells serialize as comma-joined coordinate
tokens: "m" for the vertex m of an axis, "m+" for the edge [m, m+1]
(so "0,1+" is the cell (0, (1, 2))).  Output is sorted and indented,
hence byte-stable.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping, Optional

from .errors import DocumentError
from .grid import cell_key, parse_cell_key
from .hda import HDA, validate_hda
from .precubical import PrecubicalSet, build_precubical
from .subdivision import SubdivisionMorphism, validate_subdivision


@dataclass(frozen=True)
class CubeRecord:
    id: str
    dim: int
    d0: tuple
    d1: tuple


@dataclass(frozen=True)
class HdaBlock:
    initial: tuple
    final: tuple
    labels: Mapping[str, str]


@dataclass(frozen=True)
class GridData:
    shape: tuple
    cells: Mapping[str, str]      # grid cell key -> target cell id


@dataclass(frozen=True)
class SubdivisionBlock:
    source: "ComplexDocument"
    vertex_map: Mapping[str, str]
    grids: Mapping[str, GridData]


@dataclass(frozen=True)
class ComplexDocument:
    name: str
    cubes: tuple
    hda: Optional[HdaBlock] = None
    subdivision: Optional[SubdivisionBlock] = None


# ------------------------------------------------------------- parsing

def _need(obj, key, kind, where):
    if not isinstance(obj, dict) or key not in obj:
        raise DocumentError(f"{where}: missing field {key!r}")
    value = obj[key]
    if not isinstance(value, kind):
        raise DocumentError(f"{where}: field {key!r} has wrong type")
    return value


def _id_list(value, where):
    if not isinstance(value, list) or any(not isinstance(v, str) for v in value):
        raise DocumentError(f"{where}: expected a list of identifiers")
    return tuple(value)


def document_from_json(obj) -> ComplexDocument:
    name = _need(obj, "name", str, "document")
    raw_cubes = _need(obj, "cubes", list, "document")
    cubes = []
    for i, rec in enumerate(raw_cubes):
        where = f"cube #{i}"
        cid = _need(rec, "id", str, where)
        dim = _need(rec, "dim", int, where)
        d0 = _id_list(_need(rec, "d0", list, where), where)
        d1 = _id_list(_need(rec, "d1", list, where), where)
        cubes.append(CubeRecord(cid, dim, d0, d1))
    hda = None
    if "hda" in obj:
        block = obj["hda"]
        initial = _id_list(_need(block, "initial", list, "hda"), "hda")
        final = _id_list(_need(block, "final", list, "hda"), "hda")
        labels = _need(block, "labels", dict, "hda")
        for k, v in labels.items():
            if not isinstance(k, str) or not isinstance(v, str):
                raise DocumentError("hda: labels must map edge ids to strings")
        hda = HdaBlock(initial, final, dict(labels))
    subdivision = None
    if "subdivision" in obj:
        block = obj["subdivision"]
        source = document_from_json(_need(block, "source", dict, "subdivision"))
        vmap = _need(block, "vertex_map", dict, "subdivision")
        for k, v in vmap.items():
            if not isinstance(k, str) or not isinstance(v, str):
                raise DocumentError("subdivision: vertex_map must map ids to ids")
        grids = {}
        for cube, data in _need(block, "grids", dict, "subdivision").items():
            where = f"grid of {cube!r}"
            shape = _need(data, "shape", list, where)
            if any(not isinstance(l, int) for l in shape):
                raise DocumentError(f"{where}: shape must be integers")
            cells = _need(data, "cells", dict, where)
            for k, v in cells.items():
                if not isinstance(k, str) or not isinstance(v, str):
                    raise DocumentError(f"{where}: cells must map keys to ids")
            grids[cube] = GridData(tuple(shape), dict(cells))
        subdivision = SubdivisionBlock(source, dict(vmap), grids)
    return ComplexDocument(name, tuple(cubes), hda, subdivision)


def parse_document(text: str) -> ComplexDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"not valid JSON: {e}") from None
    return document_from_json(obj)


def load_document(path: str) -> ComplexDocument:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise DocumentError(f"cannot read {path}: {e}") from None
    return parse_document(text)


# --------------------------------------------------------- serialization

def document_to_json(doc: ComplexDocument):
    obj = {
        "name": doc.name,
        "cubes": [{"id": c.id, "dim": c.dim, "d0": list(c.d0),
                   "d1": list(c.d1)} for c in doc.cubes],
    }
    if doc.hda is not None:
        obj["hda"] = {
            "initial": sorted(doc.hda.initial),
            "final": sorted(doc.hda.final),
            "labels": dict(sorted(doc.hda.labels.items())),
        }
    if doc.subdivision is not None:
        block = doc.subdivision
        obj["subdivision"] = {
            "source": document_to_json(block.source),
            "vertex_map": dict(sorted(block.vertex_map.items())),
            "grids": {cube: {"shape": list(g.shape),
                             "cells": dict(sorted(g.cells.items()))}
                      for cube, g in sorted(block.grids.items())},
        }
    return obj


def serialize_document(doc: ComplexDocument) -> str:
    return json.dumps(document_to_json(doc), indent=2, sort_keys=True) + "\n"


def save_document(doc: ComplexDocument, path: str):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_document(doc))


# ------------------------------------------------------------- builders

def build_complex(doc: ComplexDocument, limit: int = 100_000) -> PrecubicalSet:
    return build_precubical([(c.id, c.dim, c.d0, c.d1) for c in doc.cubes],
                            limit=limit)


def build_hda(doc: ComplexDocument, P: Optional[PrecubicalSet] = None) -> Optional[HDA]:
    if doc.hda is None:
        return None
    if P is None:
        P = build_complex(doc)
    return validate_hda(P, doc.hda.initial, doc.hda.final, dict(doc.hda.labels))


def build_subdivision(doc: ComplexDocument,
                      Q: Optional[PrecubicalSet] = None):
    """(source complex, morphism) from a document's subdivision block."""
    if doc.subdivision is None:
        return None
    if Q is None:
        Q = build_complex(doc)
    block = doc.subdivision
    P = build_complex(block.source)
    shapes = {}
    cell_maps = {}
    for cube, g in block.grids.items():
        shapes[cube] = g.shape
        try:
            cell_maps[cube] = {parse_cell_key(k): v for k, v in g.cells.items()}
        except ValueError as e:
            raise DocumentError(f"grid of {cube!r}: {e}") from None
    f = validate_subdivision(P, Q, block.vertex_map, shapes, cell_maps)
    return P, f


# --------------------------------------------- documents from objects

def complex_to_records(P: PrecubicalSet):
    records = []
    for n in range(P.dim + 1):
        for x in P.cells(n):
            d0, d1 = P.faces_of(x)
            records.append(CubeRecord(x, n, tuple(d0), tuple(d1)))
    return tuple(records)


def document_of(name: str, P: PrecubicalSet, hda: Optional[HDA] = None,
                subdivision: Optional[SubdivisionMorphism] = None,
                source_doc: Optional[ComplexDocument] = None) -> ComplexDocument:
    """Snapshot of a complex (the subdivision's target, if one is given)."""
    hda_block = None
    if hda is not None:
        labels = {}
        for e, w in hda.labels.items():
            if not isinstance(w, str):
                raise DocumentError("only string labels serialize")
            labels[e] = w
        hda_block = HdaBlock(tuple(sorted(hda.initial)),
                             tuple(sorted(hda.final)), labels)
    sub_block = None
    if subdivision is not None:
        f = subdivision
        if source_doc is None:
            source_doc = document_of(name + "-source", f.source)
        grids = {}
        for cube, shape in sorted(f.shapes.items()):
            cells = {cell_key(c): q for c, q in f.cell_maps[cube].items()}
            grids[cube] = GridData(shape, cells)
        sub_block = SubdivisionBlock(source_doc, dict(f.vertex_map), grids)
    return ComplexDocument(name, complex_to_records(P), hda_block, sub_block)


# ------------------------------------------------------------- exports

def export_dot(G) -> str:
    """Byte-stable DOT rendering of a homology graph."""
    lines = ["digraph homology {"]
    for node in G.nodes:
        lines.append(f'  "{node.name}" [degree={node.degree} '
                     f'torsion={node.order}];')
    for a, b in G.edges:
        lines.append(f'  "{a}" -> "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def format_vector(P: PrecubicalSet, n: int, vec) -> str:
    """Signed cell sum, e.g. '[a] - 2[b]'; '0' for the zero vector."""
    terms = []
    for cell, v in zip(P.cells(n), vec):
        if v == 0:
            continue
        mag = "" if abs(v) == 1 else str(abs(v))
        terms.append(("+" if v > 0 else "-", f"{mag}[{cell}]"))
    if not terms:
        return "0"
    sign, body = terms[0]
    out = body if sign == "+" else "-" + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out
