"""Shortest cycles through edges, eta(G), isometric cycles and exact zeta(G)."""

import logging
from collections import deque
from typing import Optional, Sequence, Union

from joblib import Parallel, delayed
from pydantic import BaseModel

from src.config import get_settings
from src.errors import TooLargeError
from src.graphs.core import Graph
from src.metrics.distances import INF, Distance, all_pairs_distances, distance_to_json


def _path_avoiding_edge(graph: Graph, e: int) -> Optional[list[int]]:
    """Shortest path between the endpoints of ``e`` in ``G - e``."""
    u, v = graph.edges[e]
    parent = {u: u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            break
        for w, f in graph.adjacency[x]:
            if f != e and w not in parent:
                parent[w] = x
                queue.append(w)
    if v not in parent:
        return None
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    return path[::-1]


def shortest_cycle_through_edge(graph: Graph, e: int) -> Distance:
    """``1 + d_{G-e}(u, v)`` for ``e = {u, v}``; INF when ``e`` is a bridge."""
    path = _path_avoiding_edge(graph, e)
    return INF if path is None else len(path)


def shortest_cycle_witness(graph: Graph, e: int) -> Optional[list[int]]:
    """Vertices ``u, ..., v`` of a shortest cycle through ``e = {u, v}``.

    The closing edge ``v u`` is ``e`` itself. None for bridges.
    """
    return _path_avoiding_edge(graph, e)


def eta(graph: Graph) -> Distance:
    """Smallest length bound such that every edge lies on a cycle that short.

    INF as soon as one edge is a bridge; 0 for edgeless graphs.
    """
    return max((shortest_cycle_through_edge(graph, e) for e in range(graph.m)), default=0)


class CycleCoverReport(BaseModel):
    """Per-edge shortest cycle lengths; infinities are written as ``"inf"``."""

    eta: Union[int, str]
    per_edge_cycle_len: list[Union[int, str]]
    witness_cycles: Optional[list[Optional[list[int]]]] = None


def cycle_cover_report(
    graph: Graph, witnesses: bool = False, threads: int = 1
) -> CycleCoverReport:
    """Compute eta with its per-edge breakdown.

    Args:
        graph: the graph.
        witnesses: also keep one shortest cycle per edge.
        threads: parallel workers over edges.

    Returns:
        CycleCoverReport: JSON-ready report.
    """
    if threads > 1 and graph.m > 1:
        paths = Parallel(n_jobs=threads, prefer="threads")(
            delayed(_path_avoiding_edge)(graph, e) for e in range(graph.m)
        )
    else:
        paths = [_path_avoiding_edge(graph, e) for e in range(graph.m)]
    lengths: list[Distance] = [INF if p is None else len(p) for p in paths]
    return CycleCoverReport(
        eta=distance_to_json(max(lengths, default=0)),
        per_edge_cycle_len=[distance_to_json(x) for x in lengths],
        witness_cycles=paths if witnesses else None,
    )


def _check_cycle(graph: Graph, cycle: Sequence[int]) -> None:
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        raise ValueError(f"{list(cycle)} is not a cycle")
    for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
        if not graph.has_edge(a, b):
            raise ValueError(f"{list(cycle)} is not a cycle: {a}-{b} missing")


def is_isometric_cycle(graph: Graph, cycle: Sequence[int]) -> bool:
    """True iff distances along the cycle equal distances in the graph.

    Raises:
        ValueError: when ``cycle`` is not a cycle of ``graph``.
    """
    _check_cycle(graph, cycle)
    dist = all_pairs_distances(graph)
    length = len(cycle)
    for i in range(length):
        for j in range(i + 1, length):
            if dist[cycle[i]][cycle[j]] != min(j - i, length - j + i):
                return False
    return True


def _has_isometric_cycle(
    graph: Graph, dist: list[tuple[Distance, ...]], length: int
) -> Optional[list[int]]:
    """Search an isometric cycle of exactly ``length``, smallest vertex first.

    Each extension checks the new vertex against every earlier one, so a
    completed cycle is isometric by construction.
    """

    def extend(path: list[int]) -> Optional[list[int]]:
        k = len(path)
        if k == length:
            return path if graph.has_edge(path[-1], path[0]) else None
        for w, _ in graph.adjacency[path[-1]]:
            if w <= path[0] or w in path:
                continue
            if all(dist[path[a]][w] == min(k - a, length - k + a) for a in range(k)):
                found = extend(path + [w])
                if found:
                    return found
        return None

    for s in range(graph.n):
        found = extend([s])
        if found:
            return found
    return None


def zeta_bruteforce(graph: Graph, max_n: Optional[int] = None) -> int:
    """Length of a largest isometric cycle, by exhaustive search.

    Args:
        graph: the graph.
        max_n: vertex cap; defaults to the ``zeta_max_n`` setting.

    Raises:
        TooLargeError: when ``graph.n`` exceeds the cap.

    Returns:
        int: zeta(G), or 0 when the graph has no cycle.
    """
    cap = get_settings().zeta_max_n if max_n is None else max_n
    if graph.n > cap:
        raise TooLargeError(f"too large for exact ζ: n={graph.n} > {cap}")
    dist = all_pairs_distances(graph)
    finite = [d for row in dist for d in row if d != INF]
    longest = min(graph.n, 2 * int(max(finite, default=0)) + 1)
    for length in range(longest, 2, -1):
        cycle = _has_isometric_cycle(graph, dist, length)
        if cycle:
            logging.debug("Largest isometric cycle %s", cycle)
            return length
    return 0
