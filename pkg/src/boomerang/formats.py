"""JSON and DOT serialization of graphs, semi Cartan graphs and bicharacters.

Colors of semi Cartan graphs are 1-based in every external format.
"""
from __future__ import annotations

import json

from .cartan import SemiCartanGraph
from .ecgraph import ColoredGraph
from .errors import ParseError
from .nichols import Bicharacter


def load_json_text(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc


def name_of(x) -> str:
    """Canonical string for vertex and color names (tuples print as ``(a,b)``)."""
    if isinstance(x, tuple):
        return "(" + ",".join(name_of(v) for v in x) + ")"
    return str(x)


def _require(data, key, kind):
    if not isinstance(data, dict) or key not in data:
        raise ParseError(f"missing key {key!r}")
    if not isinstance(data[key], kind):
        raise ParseError(f"key {key!r} has the wrong type")
    return data[key]


def graph_from_json(data) -> ColoredGraph:
    vertices = [str(v) for v in _require(data, "vertices", list)]
    edges = _require(data, "edges", list)
    triples = []
    for e in edges:
        if not isinstance(e, list) or len(e) != 3:
            raise ParseError(f"edge {e!r} is not a [u, v, c] triple")
        triples.append((str(e[0]), str(e[1]), str(e[2])))
    colors = [str(c) for c in data["colors"]] if "colors" in data else None
    try:
        return ColoredGraph(vertices, triples, colors)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def graph_to_json(g: ColoredGraph) -> dict:
    return {
        "vertices": [name_of(v) for v in g.vertices],
        "colors": [name_of(c) for c in g.colors],
        "edges": [[name_of(u), name_of(v), name_of(c)] for u, v, c in g.edges],
    }


def cartan_from_json(data) -> SemiCartanGraph:
    theta = _require(data, "theta", int)
    vs = _require(data, "vertices", list)
    gcm, names = {}, []
    for v in vs:
        name = str(_require(v, "name", (str, int)))
        names.append(name)
        gcm[name] = _require(v, "gcm", list)
    edges = []
    for e in _require(data, "edges", list):
        if not isinstance(e, list) or len(e) != 3 or not isinstance(e[2], int):
            raise ParseError(f"edge {e!r} is not an [x, y, i] triple")
        if not 1 <= e[2] <= theta:
            raise ParseError(f"edge color {e[2]} outside 1..{theta}")
        edges.append((str(e[0]), str(e[1]), e[2] - 1))
    return SemiCartanGraph.from_edges(theta, gcm, edges, names)


def cartan_to_json(G: SemiCartanGraph) -> dict:
    return {
        "theta": G.theta,
        "vertices": [{"name": name_of(x), "gcm": [list(r) for r in G.gcm[x]]} for x in G.vertices],
        "edges": [[name_of(x), name_of(y), i + 1] for x, y, i in G.edges()],
    }


def bicharacter_from_json(data) -> Bicharacter:
    try:
        return Bicharacter.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad bicharacter: {exc}") from exc


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: ColoredGraph, name="G") -> str:
    """Undirected DOT; vertices in graph order, one edge per line labeled by its color."""
    lines = [f"graph {_quote(name)} {{"]
    for v in g.vertices:
        lines.append(f"  {_quote(name_of(v))};")
    for u, v, c in g.edges:
        lines.append(f"  {_quote(name_of(u))} -- {_quote(name_of(v))} [label={_quote(name_of(c))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cartan_to_dot(G: SemiCartanGraph, name="G") -> str:
    g = G.exchange_graph().relabel(color_map={i: i + 1 for i in range(G.theta)})
    return to_dot(g, name)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
