"""Unweighted distances and the parameters derived from them."""

import logging
import math
from collections import deque
from typing import NamedTuple, Optional, Union

from joblib import Parallel, delayed

from src.errors import NotConnectedError
from src.graphs.core import Graph

INF = math.inf
Distance = Union[int, float]


def distance_to_json(value: Distance) -> Union[int, str]:
    """Distances go to JSON as ints, infinity as the string ``"inf"``."""
    return "inf" if value == INF else int(value)


class DistanceProfile(NamedTuple):
    """Result of a BFS: hop distances and BFS-tree parents (-1 at the root)."""

    source: int
    dist: tuple[Distance, ...]
    parent: tuple[int, ...]

    def path_to(self, target: int) -> list[int]:
        """Tree path from the source to ``target`` (empty if unreachable)."""
        if self.dist[target] == INF:
            return []
        path = [target]
        while path[-1] != self.source:
            path.append(self.parent[path[-1]])
        return path[::-1]


def bfs(graph: Graph, source: int) -> DistanceProfile:
    """Breadth-first search from ``source``.

    Args:
        graph: the graph.
        source: start vertex.

    Returns:
        DistanceProfile: distances (INF when unreachable) and parents.
    """
    if not 0 <= source < graph.n:
        raise ValueError(f"vertex {source} out of range")
    dist: list[Distance] = [INF] * graph.n
    parent = [-1] * graph.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w, _ in graph.adjacency[v]:
            if dist[w] == INF:
                dist[w] = dist[v] + 1
                parent[w] = v
                queue.append(w)
    return DistanceProfile(source, tuple(dist), tuple(parent))


def all_pairs_distances(graph: Graph, threads: int = 1) -> list[tuple[Distance, ...]]:
    """Distance matrix by one BFS per source, optionally spread over threads."""
    if threads > 1 and graph.n > 1:
        profiles = Parallel(n_jobs=threads, prefer="threads")(
            delayed(bfs)(graph, s) for s in range(graph.n)
        )
    else:
        profiles = [bfs(graph, s) for s in range(graph.n)]
    return [p.dist for p in profiles]


def eccentricities(graph: Graph, threads: int = 1) -> list[Distance]:
    return [max(row, default=0) for row in all_pairs_distances(graph, threads)]


def radius_diameter_centers(graph: Graph, threads: int = 1) -> tuple[int, int, list[int]]:
    """Radius, diameter and the sorted list of centers.

    Raises:
        NotConnectedError: when the graph is empty or disconnected.
    """
    if not graph.is_connected():
        raise NotConnectedError()
    ecc = eccentricities(graph, threads)
    rad, diam = int(min(ecc)), int(max(ecc))
    centers = [v for v, e in enumerate(ecc) if e == rad]
    logging.debug("rad=%d diam=%d centers=%s", rad, diam, centers)
    return rad, diam, centers


def k_step_neighborhood(graph: Graph, u: int, k: int, closed: bool = False) -> set[int]:
    """Vertices at distance exactly ``k`` from ``u`` (at most ``k`` if closed)."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    dist = bfs(graph, u).dist
    if closed:
        return {y for y, d in enumerate(dist) if d <= k}
    return {y for y, d in enumerate(dist) if d == k}


def distance_layers(graph: Graph, u: int) -> list[list[int]]:
    """BFS layers ``N_0(u), N_1(u), ...`` of the component of ``u``."""
    dist = bfs(graph, u).dist
    depth = int(max(d for d in dist if d != INF))
    layers: list[list[int]] = [[] for _ in range(depth + 1)]
    for v, d in enumerate(dist):
        if d != INF:
            layers[int(d)].append(v)
    return layers


def girth(graph: Graph) -> Distance:
    """Length of a shortest cycle, INF for forests.

    A BFS from every vertex; a non-tree edge ``{v, w}`` closes a cycle of
    length at most ``dist[v] + dist[w] + 1``, with equality for the source on
    a shortest cycle.
    """
    best: Distance = INF
    for s in range(graph.n):
        dist: list[Distance] = [INF] * graph.n
        via = [-1] * graph.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] + 1 >= best:
                break
            for w, e in graph.adjacency[v]:
                if e == via[v]:
                    continue
                if dist[w] == INF:
                    dist[w] = dist[v] + 1
                    via[w] = e
                    queue.append(w)
                else:
                    best = min(best, dist[v] + dist[w] + 1)
    return best


class Bipartition(NamedTuple):
    """Two color classes, or an odd cycle proving there are none."""

    left: tuple[int, ...]
    right: tuple[int, ...]
    odd_cycle: Optional[tuple[int, ...]] = None

    @property
    def bipartite(self) -> bool:
        return self.odd_cycle is None


def bipartition(graph: Graph) -> Bipartition:
    """2-color by BFS parity; each component's smallest vertex goes left.

    Returns:
        Bipartition: classes, or ``odd_cycle`` set to a witness cycle.
    """
    side = [-1] * graph.n
    parent = [-1] * graph.n
    for root in range(graph.n):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w, _ in graph.adjacency[v]:
                if side[w] == -1:
                    side[w] = 1 - side[v]
                    parent[w] = v
                    queue.append(w)
                elif side[w] == side[v]:
                    return Bipartition((), (), _odd_cycle(parent, v, w))
    left = tuple(v for v in range(graph.n) if side[v] == 0)
    right = tuple(v for v in range(graph.n) if side[v] == 1)
    return Bipartition(left, right)


def _odd_cycle(parent: list[int], v: int, w: int) -> tuple[int, ...]:
    """Close the BFS-tree paths of two same-colored adjacent vertices."""
    up_v, up_w = [v], [w]
    while parent[up_v[-1]] != -1:
        up_v.append(parent[up_v[-1]])
    while parent[up_w[-1]] != -1:
        up_w.append(parent[up_w[-1]])
    ancestors_w = set(up_w)
    meet = next(x for x in up_v if x in ancestors_w)
    left = up_v[: up_v.index(meet) + 1]
    right = up_w[: up_w.index(meet)]
    return tuple(left[::-1] + right)
