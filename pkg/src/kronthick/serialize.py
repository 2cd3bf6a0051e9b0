"""Canonical JSON documents and DOT export for graphs and decompositions.

The JSON writer is deterministic (sorted keys, sorted vertices and edges,
two-space indent, trailing newline), so write -> read -> write is
byte-identical; tests rely on that.  Vertex references inside edge lists
use the short printable names (x1_3, u_4, p2_1.u_1).
"""

from __future__ import annotations

import json

from .bounds import BoundReport
from .constructions import Decomposition, MinimalBipartiteDecomposition
from .errors import DocumentFormatError, SeedInvalidError
from .graphs import (
    Family,
    Graph,
    ProductVertex,
    VertexLabel,
    edge,
    make_complete_bipartite,
)
from .verification import VerificationReport

FORMAT_VERSION = "1"

_FAMILY_NAMES = {fam: ("Plain" if fam is Family.PLAIN else fam.name) for fam in Family}
_FAMILIES_BY_NAME = {name: fam for fam, name in _FAMILY_NAMES.items()}


# ============================================================
# Vertices
# ============================================================


def vertex_object(v) -> dict:
    if isinstance(v, ProductVertex):
        return {"left": vertex_object(v.left), "right": vertex_object(v.right)}
    obj: dict = {"family": _FAMILY_NAMES[v.family], "index": v.index}
    if v.layer is not None:
        obj["layer"] = v.layer
    return obj


def vertex_from_object(obj) -> VertexLabel | ProductVertex:
    if not isinstance(obj, dict):
        raise DocumentFormatError(f"vertex entry must be an object, got {obj!r}")
    if "left" in obj or "right" in obj:
        if set(obj) != {"left", "right"}:
            raise DocumentFormatError(f"pair vertex needs exactly left/right: {obj!r}")
        left = vertex_from_object(obj["left"])
        right = vertex_from_object(obj["right"])
        if not isinstance(left, VertexLabel) or not isinstance(right, VertexLabel):
            raise DocumentFormatError("pair vertices cannot nest")
        return ProductVertex(left, right)
    try:
        family = _FAMILIES_BY_NAME[obj["family"]]
        index = obj["index"]
        layer = obj.get("layer")
    except KeyError as exc:
        raise DocumentFormatError(f"bad vertex object {obj!r}") from exc
    if not isinstance(index, int) or layer not in (None, 1, 2):
        raise DocumentFormatError(f"bad vertex object {obj!r}")
    try:
        return VertexLabel(family, index, layer)
    except Exception as exc:
        raise DocumentFormatError(f"bad vertex object {obj!r}: {exc}") from exc


# ============================================================
# Graphs
# ============================================================


def _graph_object(g: Graph) -> dict:
    return {
        "vertices": [vertex_object(v) for v in g.vertices],
        "edges": [[a.name, b.name] for a, b in g.edges],
    }


def graph_document(g: Graph) -> dict:
    doc = _graph_object(g)
    doc["format_version"] = FORMAT_VERSION
    return doc


def _graph_from_object(obj) -> Graph:
    if not isinstance(obj, dict) or "vertices" not in obj or "edges" not in obj:
        raise DocumentFormatError("graph object needs 'vertices' and 'edges'")
    vertices = [vertex_from_object(o) for o in obj["vertices"]]
    by_name: dict = {}
    for v in vertices:
        if v.name in by_name:
            raise DocumentFormatError(f"duplicate vertex {v.name}")
        by_name[v.name] = v
    edges = []
    seen = set()
    for entry in obj["edges"]:
        if not isinstance(entry, list) or len(entry) != 2:
            raise DocumentFormatError(f"edge entry must be a [ref, ref] pair: {entry!r}")
        ra, rb = entry
        if ra not in by_name or rb not in by_name:
            raise DocumentFormatError(f"edge references unknown vertex: {entry!r}")
        try:
            e = edge(by_name[ra], by_name[rb])
        except Exception as exc:
            raise DocumentFormatError(f"bad edge {entry!r}: {exc}") from exc
        if e in seen:
            raise DocumentFormatError(f"duplicate edge {entry!r}")
        seen.add(e)
        edges.append(e)
    return Graph(vertices, edges)


def graph_from_document(doc) -> Graph:
    _check_version(doc)
    return _graph_from_object(doc)


def _check_version(doc) -> None:
    if not isinstance(doc, dict):
        raise DocumentFormatError("document must be a JSON object")
    if doc.get("format_version") != FORMAT_VERSION:
        raise DocumentFormatError(
            f"unsupported format_version {doc.get('format_version')!r}"
        )


# ============================================================
# Decompositions
# ============================================================


def decomposition_document(d: Decomposition) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "target": _graph_object(d.target),
        "parts": [_graph_object(g) for g in d.parts],
        "guarantee": d.guarantee,
        "provenance": {"theorem": d.provenance, "figure": d.figure},
    }


def decomposition_from_document(doc) -> Decomposition:
    _check_version(doc)
    for key in ("target", "parts", "guarantee", "provenance"):
        if key not in doc:
            raise DocumentFormatError(f"decomposition document missing '{key}'")
    prov = doc["provenance"]
    if not isinstance(prov, dict) or "theorem" not in prov:
        raise DocumentFormatError("provenance must be an object with a 'theorem'")
    figure = prov.get("figure")
    if figure is not None and not isinstance(figure, str):
        raise DocumentFormatError("provenance figure must be a string or null")
    return Decomposition(
        target=_graph_from_object(doc["target"]),
        parts=tuple(_graph_from_object(o) for o in doc["parts"]),
        guarantee=str(doc["guarantee"]),
        provenance=str(prov["theorem"]),
        figure=figure,
    )


def is_decomposition_document(doc) -> bool:
    return isinstance(doc, dict) and "parts" in doc and "target" in doc


# ============================================================
# Reports
# ============================================================


def _edge_names(e) -> list[str]:
    return [e[0].name, e[1].name]


def report_document(report: VerificationReport) -> dict:
    return {
        "passed": report.passed,
        "optimality": report.optimality,
        "coverage_missing": [_edge_names(e) for e in report.coverage_missing],
        "coverage_extra": [_edge_names(e) for e in report.coverage_extra],
        "overlap": [
            {"edge": _edge_names(e), "parts": list(parts)}
            for e, parts in report.overlap
        ],
        "nonplanar_parts": list(report.nonplanar_parts),
    }


def bound_report_document(rep: BoundReport) -> dict:
    return {
        "lower": rep.lower,
        "upper": rep.upper,
        "exact": rep.exact,
        "provenance": list(rep.provenance),
    }


# ============================================================
# Seeds
# ============================================================


def seed_from_document(doc) -> MinimalBipartiteDecomposition:
    """Read a seed (a decomposition of K_{4p+3,4p+3}) from a document.

    Shape checks only; the full planarity/coverage validation happens in
    the assembly step, so a bad seed file still fails loudly.
    """
    d = decomposition_from_document(doc)
    m2 = d.target.num_vertices
    m = m2 // 2
    if m2 == 0 or m2 % 2 != 0 or d.target != make_complete_bipartite(m, m):
        raise SeedInvalidError("seed target must be K_{m,m} on u/v vertices")
    if m % 4 != 3:
        raise SeedInvalidError(f"seed side size must be 4p+3, got {m}")
    if not d.parts or d.parts[-1].num_edges != 1:
        raise SeedInvalidError("seed's last part must be a single edge")
    return MinimalBipartiteDecomposition(
        p=(m - 3) // 4,
        parts=d.parts,
        single_edge=d.parts[-1].edges[0],
    )


def load_seed_file(path) -> MinimalBipartiteDecomposition:
    return seed_from_document(load_json(path))


# ============================================================
# JSON and DOT I/O
# ============================================================


def to_json(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def load_json(path):
    with open(path, encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise DocumentFormatError(f"invalid JSON in {path}: {exc}") from exc


def write_json(doc, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_json(doc))


def graph_to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in g.vertices:
        lines.append(f'  "{v.name}";')
    for a, b in g.edges:
        lines.append(f'  "{a.name}" -- "{b.name}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
