"""Graph serialization: JSON, DIMACS .col import, DOT export."""

from __future__ import annotations

import json
from typing import Any, Dict

from .graph import Graph


class GraphFormatError(ValueError):
    """Raised on malformed graph input."""


def graph_to_json_obj(g: Graph) -> Dict[str, Any]:
    obj: Dict[str, Any] = {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}
    if g.labels:
        obj["labels"] = {str(v): lab for v, lab in sorted(g.labels.items())}
    return obj


def graph_from_json_obj(obj: Any) -> Graph:
    if not isinstance(obj, dict):
        raise GraphFormatError("graph JSON must be an object")
    if "n" not in obj or "edges" not in obj:
        raise GraphFormatError('graph JSON requires fields "n" and "edges"')
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise GraphFormatError('"n" must be a non-negative integer')
    raw_edges = obj["edges"]
    if not isinstance(raw_edges, list):
        raise GraphFormatError('"edges" must be an array')
    edges = []
    for e in raw_edges:
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)
        ):
            raise GraphFormatError(f"bad edge entry: {e!r}")
        u, v = e
        if u == v:
            raise GraphFormatError(f"self-loop on vertex {u}")
        if not u < v:
            raise GraphFormatError(f"edge [{u}, {v}] must satisfy u < v")
        if not (0 <= u and v < n):
            raise GraphFormatError(f"edge [{u}, {v}] out of range for n={n}")
        edges.append((u, v))
    labels = {}
    for key, lab in (obj.get("labels") or {}).items():
        try:
            vid = int(key)
        except ValueError:
            raise GraphFormatError(f"label key {key!r} is not a decimal id")
        if not (0 <= vid < n) or not isinstance(lab, str):
            raise GraphFormatError(f"bad label entry {key!r}: {lab!r}")
        labels[vid] = lab
    try:
        return Graph(n, edges, labels=labels)
    except ValueError as exc:  # duplicates
        raise GraphFormatError(str(exc)) from exc


def graph_to_json(g: Graph) -> str:
    return json.dumps(graph_to_json_obj(g), sort_keys=True)


def graph_from_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}") from exc
    return graph_from_json_obj(obj)


def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS .col ("p edge n m" / "e u v", 1-based ids) to a Graph."""
    n = None
    edges = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphFormatError(f"line {lineno}: duplicate problem line")
            if len(parts) != 4 or parts[1] not in ("edge", "edges", "col"):
                raise GraphFormatError(f"line {lineno}: bad problem line")
            n = int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise GraphFormatError(f"line {lineno}: bad edge line")
            u, v = int(parts[1]) - 1, int(parts[2]) - 1
            if u == v:
                raise GraphFormatError(f"line {lineno}: self-loop")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"line {lineno}: vertex out of range")
            edges.add((min(u, v), max(u, v)))
        else:
            raise GraphFormatError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise GraphFormatError("missing problem line")
    return Graph(n, sorted(edges))


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if v in g.labels:
            lines.append(f'  {v} [label="{g.labels[v]}"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_graph(path: str) -> Graph:
    """Load a graph file; .col is treated as DIMACS, anything else as JSON."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith(".col"):
        return parse_dimacs(text)
    return graph_from_json(text)
