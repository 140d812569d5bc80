"""Edge-list, orientation and coloring text formats.

All documents are UTF-8, one record per line, newline-terminated. Lines
starting with ``#`` are comments. A graph document may carry one header line
``n <count>`` to declare isolated trailing vertices.
"""

import logging
from typing import Iterator

from src.errors import GraphFormatError
from src.graphs.core import EdgeColoring, Graph, Orientation


def _records(text: str) -> Iterator[tuple[int, list[str]]]:
    """Yield ``(line number, tokens)`` for every non-blank, non-comment line."""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield number, line.split()


def _vertex(token: str, number: int) -> int:
    if not (token.isascii() and token.isdigit()):
        raise GraphFormatError(f"malformed vertex id {token!r}", line=number)
    return int(token)


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document.

    Args:
        text: document content.

    Raises:
        GraphFormatError: on malformed tokens, self-loops, duplicate edges or
            a header smaller than the ids used.

    Returns:
        Graph: edge ids follow file order.
    """
    declared = None
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    for number, tokens in _records(text):
        if tokens[0] == "n":
            if len(tokens) != 2 or declared is not None:
                raise GraphFormatError("bad or repeated 'n <count>' header", line=number)
            declared = _vertex(tokens[1], number)
            continue
        if len(tokens) != 2:
            raise GraphFormatError(f"expected 2 tokens, got {len(tokens)}", line=number)
        u, v = _vertex(tokens[0], number), _vertex(tokens[1], number)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", line=number)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(
                f"duplicate edge {u} {v} (first on line {seen[key]})", line=number
            )
        seen[key] = number
        edges.append((u, v))

    n = 1 + max((max(e) for e in edges), default=-1)
    if declared is not None:
        if declared < n:
            raise GraphFormatError(f"header declares n={declared} but ids reach {n - 1}")
        n = declared
    logging.debug("Parsed graph with %d vertices and %d edges", n, len(edges))
    return Graph(n, edges)


def serialize_graph(graph: Graph) -> str:
    """Write a graph as an edge list, adding the header when needed."""
    lines = []
    if graph.n != 1 + max((max(e) for e in graph.edges), default=-1):
        lines.append(f"n {graph.n}")
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "".join(line + "\n" for line in lines)


def serialize_orientation(orientation: Orientation) -> str:
    """One ``u v`` line per edge, meaning the arc ``u -> v``, in edge-id order."""
    return "".join(f"{a} {b}\n" for a, b in orientation.arcs())


def parse_orientation(graph: Graph, text: str) -> Orientation:
    """Read an orientation of ``graph``; arcs may come in any order."""
    arcs = []
    for number, tokens in _records(text):
        if len(tokens) != 2:
            raise GraphFormatError(f"expected 2 tokens, got {len(tokens)}", line=number)
        arcs.append((_vertex(tokens[0], number), _vertex(tokens[1], number)))
    try:
        return Orientation.from_arcs(graph, arcs)
    except ValueError as error:
        raise GraphFormatError(str(error)) from error


def serialize_coloring(coloring: EdgeColoring) -> str:
    """One ``u v color`` line per edge in edge-id order."""
    return "".join(
        f"{u} {v} {c}\n" for (u, v), c in zip(coloring.graph.edges, coloring.colors)
    )


def parse_coloring(graph: Graph, text: str) -> EdgeColoring:
    """Read a coloring of ``graph``; every edge must be listed exactly once."""
    colors: list[int] = [-1] * graph.m
    for number, tokens in _records(text):
        if len(tokens) != 3:
            raise GraphFormatError(f"expected 3 tokens, got {len(tokens)}", line=number)
        u, v, c = (_vertex(t, number) for t in tokens)
        e = graph.edge_id(u, v)
        if e is None:
            raise GraphFormatError(f"{u} {v} is not an edge", line=number)
        if colors[e] != -1:
            raise GraphFormatError(f"edge {u} {v} colored twice", line=number)
        colors[e] = c
    if -1 in colors:
        raise GraphFormatError(f"{colors.count(-1)} edges have no color")
    try:
        return EdgeColoring(graph, colors)
    except ValueError as error:
        raise GraphFormatError(str(error)) from error
