"""JSON graph documents and Graphviz DOT export.

A document looks like::

    {
      "degree": 4,
      "edges": [{"colors": [2], "source": 0, "target": 1}, ...],
      "kind": "colored_digraph",
      "vertices": [{"id": 0, "tableau": [[1, 1], [2, 2]]}, ...]
    }

``kind`` is ``"colored_digraph"`` (directed edges, colors ``1..degree-1``)
or ``"signed_colored_graph"`` (unordered pairs with ``source < target``,
colors ``2..degree-1``, and a ``"signature"`` string such as ``"+-+"`` on
every vertex).  Tableaux are listed bottom row first.  Serialization is
canonical: sorted keys, sorted edges, two-space indent, trailing newline.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Union

from .errors import SchemaError, TableauError
from .graphs import ColoredDigraph, SignedColoredGraph, parse_signature, signature_string
from .tableaux import Tableau

DIGRAPH = "colored_digraph"
SIGNED = "signed_colored_graph"

Graph = Union[ColoredDigraph, SignedColoredGraph]


@dataclass
class GraphDocument:
    kind: str
    degree: int
    vertices: list[dict[str, Any]] = field(default_factory=list)
    edges: list[dict[str, Any]] = field(default_factory=list)

    def to_json_obj(self) -> dict:
        return {"kind": self.kind, "degree": self.degree, "vertices": self.vertices, "edges": self.edges}


def document_from_graph(g: Graph) -> GraphDocument:
    vertices = []
    for v in range(g.size):
        entry: dict[str, Any] = {"id": v}
        if g.labels is not None:
            entry["tableau"] = [list(row) for row in g.labels[v].rows]
        if isinstance(g, SignedColoredGraph):
            entry["signature"] = signature_string(g.signatures[v])
        vertices.append(entry)
    pairs: dict[tuple[int, int], list[int]] = {}
    for s, t, c in g.edges():
        pairs.setdefault((s, t), []).append(c)
    edges = [{"source": s, "target": t, "colors": sorted(cs)} for (s, t), cs in sorted(pairs.items())]
    kind = SIGNED if isinstance(g, SignedColoredGraph) else DIGRAPH
    return GraphDocument(kind, g.degree, vertices, edges)


def graph_from_document(doc: GraphDocument) -> Graph:
    labels = None
    if doc.vertices and all("tableau" in v for v in doc.vertices):
        labels = [Tableau(tuple(tuple(r) for r in v["tableau"])) for v in doc.vertices]
    triples = [(e["source"], e["target"], c) for e in doc.edges for c in e["colors"]]
    if doc.kind == SIGNED:
        sigs = [parse_signature(v["signature"]) for v in doc.vertices]
        return SignedColoredGraph(doc.degree, sigs, triples, labels)
    return ColoredDigraph(len(doc.vertices), doc.degree, triples, labels)


def serialize(doc: GraphDocument) -> str:
    validate(doc.to_json_obj())
    return json.dumps(doc.to_json_obj(), sort_keys=True, indent=2) + "\n"


def deserialize(text: str) -> GraphDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("", f"invalid JSON: {exc}") from None
    validate(obj)
    return GraphDocument(obj["kind"], obj["degree"], obj["vertices"], obj["edges"])


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _expect_keys(obj, pointer, required, optional=()):
    if not isinstance(obj, dict):
        raise SchemaError(pointer, "expected an object")
    for key in required:
        if key not in obj:
            raise SchemaError(pointer, f"missing required field {key!r}")
    for key in obj:
        if key not in required and key not in optional:
            raise SchemaError(f"{pointer}/{key}", "unknown field")


def validate(obj: Any) -> None:
    """Raise :class:`SchemaError` with a JSON pointer on the first problem."""
    _expect_keys(obj, "", ("kind", "degree", "vertices", "edges"))
    kind = obj["kind"]
    if kind not in (DIGRAPH, SIGNED):
        raise SchemaError("/kind", f"must be {DIGRAPH!r} or {SIGNED!r}")
    degree = obj["degree"]
    if not _is_int(degree) or degree < 1:
        raise SchemaError("/degree", "must be an integer >= 1")
    vertices = obj["vertices"]
    if not isinstance(vertices, list):
        raise SchemaError("/vertices", "expected an array")
    for k, v in enumerate(vertices):
        where = f"/vertices/{k}"
        _expect_keys(v, where, ("id", "signature") if kind == SIGNED else ("id",), ("tableau",))
        if not _is_int(v["id"]) or v["id"] != k:
            raise SchemaError(f"{where}/id", f"ids must be dense 0..V-1; expected {k}")
        if "tableau" in v:
            _check_tableau(v["tableau"], f"{where}/tableau")
        if kind == SIGNED:
            sig = v["signature"]
            if not isinstance(sig, str) or any(ch not in "+-" for ch in sig):
                raise SchemaError(f"{where}/signature", "must be a string over '+' and '-'")
            if len(sig) != degree - 1:
                raise SchemaError(f"{where}/signature", f"length must be degree-1 = {degree - 1}")
    edges = obj["edges"]
    if not isinstance(edges, list):
        raise SchemaError("/edges", "expected an array")
    lo = 2 if kind == SIGNED else 1
    for k, e in enumerate(edges):
        where = f"/edges/{k}"
        _expect_keys(e, where, ("source", "target", "colors"))
        for end in ("source", "target"):
            if not _is_int(e[end]) or not 0 <= e[end] < len(vertices):
                raise SchemaError(f"{where}/{end}", f"must be a vertex id in 0..{len(vertices) - 1}")
        if kind == SIGNED and e["source"] >= e["target"]:
            raise SchemaError(f"{where}/target", "signed graph edges need source < target")
        colors = e["colors"]
        if not isinstance(colors, list) or not colors:
            raise SchemaError(f"{where}/colors", "expected a non-empty array")
        for j, c in enumerate(colors):
            if not _is_int(c) or not lo <= c <= degree - 1:
                raise SchemaError(f"{where}/colors/{j}", f"color must lie in {lo}..{degree - 1}")
        if len(set(colors)) != len(colors):
            raise SchemaError(f"{where}/colors", "repeated color")


def _check_tableau(rows, pointer):
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise SchemaError(pointer, "expected an array of rows")
    for r, row in enumerate(rows):
        for c, x in enumerate(row):
            if not _is_int(x):
                raise SchemaError(f"{pointer}/{r}/{c}", "entries must be integers")
    try:
        Tableau(tuple(tuple(r) for r in rows))
    except TableauError as exc:
        cell = f"/{exc.cell[0]}/{exc.cell[1]}" if exc.cell else ""
        raise SchemaError(pointer + cell, str(exc)) from None


def write_graph(g: Graph) -> str:
    return serialize(document_from_graph(g))


def read_graph(text: str) -> Graph:
    return graph_from_document(deserialize(text))


_STYLES = ("dashed", "solid", "bold")


def _dot_label(vertex: dict) -> str:
    lines = []
    if "tableau" in vertex:
        lines = [" ".join(map(str, row)) for row in reversed(vertex["tableau"])]
    if "signature" in vertex:
        lines.append(vertex["signature"] or "()")
    if not lines:
        lines = [str(vertex["id"])]
    return "\\n".join(lines)


def export_dot(doc: GraphDocument, name: str = "G") -> str:
    """Graphviz text: one edge statement per color, styled by color index."""
    directed = doc.kind == DIGRAPH
    arrow = "->" if directed else "--"
    lines = [f"{'digraph' if directed else 'graph'} {name} {{",
             "  node [shape=box, fontname=\"monospace\"];"]
    for v in doc.vertices:
        lines.append(f"  v{v['id']} [label=\"{_dot_label(v)}\"];")
    for e in doc.edges:
        for c in e["colors"]:
            style = _STYLES[(c - 1) % len(_STYLES)]
            lines.append(f"  v{e['source']} {arrow} v{e['target']} "
                         f"[label=\"{c}\", style={style}, colorscheme=set19, color={(c - 1) % 9 + 1}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
