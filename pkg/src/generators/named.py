"""Small named graphs used as fixtures."""

from typing import Sequence

import networkx as nx

from src.graphs.core import Graph


def gen_path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs at least one vertex, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def gen_complete(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graph needs at least one vertex, got {n}")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def gen_complete_bipartite(a: int, b: int, offset: int = 0) -> list[tuple[int, int]]:
    """Edges of ``K_{a,b}`` on ``offset..offset+a+b-1``, left part first."""
    return [(offset + i, offset + a + j) for i in range(a) for j in range(b)]


def gen_petersen() -> Graph:
    return Graph.from_networkx(nx.petersen_graph())


def gen_wheel(k: int) -> Graph:
    """Hub 0 joined to the rim cycle ``1..k``."""
    if k < 3:
        raise ValueError(f"wheel rim needs at least 3 vertices, got {k}")
    rim = [(i, i % k + 1) for i in range(1, k + 1)]
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)] + rim)


def gen_theta(lengths: Sequence[int]) -> Graph:
    """Internally disjoint paths of the given lengths between vertices 0 and 1.

    At most one path may have length 1.
    """
    if len(lengths) < 2 or min(lengths) < 1 or list(lengths).count(1) > 1:
        raise ValueError(f"bad theta path lengths {list(lengths)}")
    edges = []
    n = 2
    for length in lengths:
        chain = [0] + list(range(n, n + length - 1)) + [1]
        n += length - 1
        edges.extend(zip(chain, chain[1:]))
    return Graph(n, edges)
