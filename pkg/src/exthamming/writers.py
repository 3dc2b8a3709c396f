"""Serialisation of graphs to edge lists, DIMACS and JSON adjacency."""

from __future__ import annotations

import json

import numpy as np

from exthamming.graphcore import Graph

FORMATS = ("edgelist", "dimacs", "json")


def _lines(pairs: np.ndarray, prefix: str = "", shift: int = 0) -> str:
    if pairs.size == 0:
        return ""
    body = "\n".join(f"{prefix}{u + shift} {v + shift}" for u, v in pairs.tolist())
    return body + "\n"


def format_edgelist(g: Graph) -> str:
    """One ``u v`` line per edge, u < v, sorted by (u, v)."""
    return _lines(g.edges())


def format_dimacs(g: Graph) -> str:
    header = f"p edge {g.vertex_count} {g.edge_count}\n"
    return header + _lines(g.edges(), prefix="e ", shift=1)


def format_json(g: Graph) -> str:
    doc = {
        "vertex_count": g.vertex_count,
        "edge_count": g.edge_count,
        "adjacency": {str(v): nb for v, nb in g.adjacency_lists().items()},
    }
    return json.dumps(doc) + "\n"


def format_graph(g: Graph, fmt: str) -> str:
    if fmt == "edgelist":
        return format_edgelist(g)
    if fmt == "dimacs":
        return format_dimacs(g)
    if fmt == "json":
        return format_json(g)
    raise ValueError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")


def parse_edgelist(text: str) -> list[tuple[int, int]]:
    return [tuple(int(x) for x in line.split()) for line in text.splitlines() if line]
