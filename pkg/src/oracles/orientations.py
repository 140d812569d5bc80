"""Strong connectivity, directed radius/diameter and exhaustive orientation search.

Directed eccentricity is out-eccentricity: ``ecc(v) = max_w d(v, w)``.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Optional

import numpy as np
from joblib import Parallel, delayed

from src.config import get_settings
from src.errors import NotConnectedError, TooLargeError
from src.graphs.core import Graph, Orientation
from src.metrics.distances import INF, Distance

CHUNK_BITS = 15


def directed_distances_from(orientation: Orientation, source: int) -> list[Distance]:
    """Out-distances from ``source``; INF where unreachable."""
    out = orientation.out_adjacency()
    dist: list[Distance] = [INF] * orientation.graph.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in out[v]:
            if dist[w] == INF:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def _reaches_all(adjacency: list[list[int]], n: int) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        for w in adjacency[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def is_strongly_connected(orientation: Orientation) -> bool:
    """Vertex 0 reaches everything and everything reaches vertex 0."""
    n = orientation.graph.n
    if n == 0:
        return False
    return _reaches_all(orientation.out_adjacency(), n) and _reaches_all(
        orientation.in_adjacency(), n
    )


def directed_eccentricities(orientation: Orientation, threads: int = 1) -> list[Distance]:
    """Out-eccentricity of every vertex, one BFS per source."""
    sources = range(orientation.graph.n)
    if threads > 1 and orientation.graph.n > 1:
        rows = Parallel(n_jobs=threads, prefer="threads")(
            delayed(directed_distances_from)(orientation, s) for s in sources
        )
    else:
        rows = [directed_distances_from(orientation, s) for s in sources]
    return [max(row) for row in rows]


def directed_rad_diam(orientation: Orientation, threads: int = 1) -> Optional[tuple[int, int]]:
    """``(rad, diam)`` of a strong orientation, None when it is not strong."""
    if not is_strongly_connected(orientation):
        return None
    ecc = directed_eccentricities(orientation, threads)
    return int(min(ecc)), int(max(ecc))


@dataclass
class OrientationSearch:
    """Outcome of the exhaustive search over all ``2^m`` orientations."""

    best_diameter: Optional[int]
    best_orientation: Optional[Orientation]
    best_radius: Optional[int]
    strong_count: int
    enumerated: int

    def to_dict(self) -> dict:
        return {
            "best_diameter": self.best_diameter,
            "best_radius": self.best_radius,
            "best_orientation": (
                None if self.best_orientation is None else self.best_orientation.arcs()
            ),
            "strong_count": self.strong_count,
            "enumerated": self.enumerated,
        }


def _out_bitsets(graph: Graph, masks: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Per-mask out- and in-neighbor bitsets, shape ``(len(masks), n)``."""
    out = np.zeros((len(masks), graph.n), dtype=np.int64)
    into = np.zeros_like(out)
    for e, (a, b) in enumerate(graph.edges):
        fwd = ((masks >> e) & 1).astype(bool)
        out[fwd, a] |= 1 << b
        into[fwd, b] |= 1 << a
        out[~fwd, b] |= 1 << a
        into[~fwd, a] |= 1 << b
    return out, into


def _sweep(graph: Graph, start: int, stop: int) -> tuple[int, int, int, int]:
    """Scan masks ``start..stop-1``.

    Returns:
        tuple: best diameter, smallest mask attaining it, best radius and the
        number of strong orientations; ``n + 1`` stands for "none".
    """
    n = graph.n
    none = n + 1
    masks = np.arange(start, stop, dtype=np.int64)
    out, into = _out_bitsets(graph, masks)
    if n > 1:
        keep = (out != 0).all(axis=1) & (into != 0).all(axis=1)
        masks, out = masks[keep], out[keep]
    if len(masks) == 0:
        return none, -1, none, 0

    full = (1 << n) - 1
    ecc = np.zeros((len(masks), n), dtype=np.int64)
    for s in range(n):
        reached = np.full(len(masks), 1 << s, dtype=np.int64)
        frontier = reached.copy()
        ecc_s = np.where(reached == full, 0, none)
        level = 0
        while frontier.any():
            level += 1
            nxt = np.zeros_like(frontier)
            for v in range(n):
                has = ((frontier >> v) & 1).astype(bool)
                if has.any():
                    nxt[has] |= out[has, v]
            nxt &= ~reached
            reached |= nxt
            frontier = nxt
            ecc_s[(reached == full) & (ecc_s == none)] = level
        ecc[:, s] = ecc_s

    diam = ecc.max(axis=1)
    strong = diam < none
    if not strong.any():
        return none, -1, none, 0
    best = int(diam[strong].min())
    mask = int(masks[strong & (diam == best)].min())
    rad = int(ecc[strong].min(axis=1).min())
    return best, mask, rad, int(strong.sum())


def optimal_oriented_diameter(
    graph: Graph, max_edges: Optional[int] = None, threads: Optional[int] = None
) -> OrientationSearch:
    """Try all ``2^m`` orientations.

    Masks are scanned in numpy batches, batches spread over joblib workers.
    Ties for the best diameter go to the smallest bitmask.

    Raises:
        NotConnectedError: for disconnected input.
        TooLargeError: above ``max_edges``.
    """
    settings = get_settings()
    cap = settings.exhaustive_max_edges if max_edges is None else max_edges
    workers = settings.threads if threads is None else threads
    if graph.m > cap:
        raise TooLargeError(
            f"{graph.m} edges exceed the exhaustive cap of {cap}; use bounds instead"
        )
    if not graph.is_connected():
        raise NotConnectedError()

    total = 1 << graph.m
    step = 1 << CHUNK_BITS
    chunks = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
    logging.info("Exhaustive search: %d orientations in %d batches", total, len(chunks))
    if workers > 1 and len(chunks) > 1:
        parts = Parallel(n_jobs=workers, prefer="threads")(
            delayed(_sweep)(graph, lo, hi) for lo, hi in chunks
        )
    else:
        parts = [_sweep(graph, lo, hi) for lo, hi in chunks]

    none = graph.n + 1
    strong_count = sum(p[3] for p in parts)
    if strong_count == 0:
        return OrientationSearch(None, None, None, 0, total)
    best = min(p[0] for p in parts)
    mask = min(p[1] for p in parts if p[0] == best)
    rad = min(p[2] for p in parts if p[2] < none)
    return OrientationSearch(best, Orientation.from_bitmask(graph, mask), rad, strong_count, total)
