"""Exact rainbow-connectivity checks and the exact rainbow connection number."""

import logging
from collections import deque
from typing import Iterable, Iterator, Optional, Sequence

from joblib import Parallel, delayed
from pydantic import BaseModel

from src.config import get_settings
from src.errors import NotConnectedError, TooLargeError
from src.graphs.core import EdgeColoring, Graph
from src.metrics.distances import radius_diameter_centers


def loop_erase(walk: Sequence[int]) -> list[int]:
    """Cut every closed detour out of a walk, leaving a path with the same ends."""
    path: list[int] = []
    where: dict[int, int] = {}
    for v in walk:
        if v in where:
            for dropped in path[where[v] + 1 :]:
                del where[dropped]
            del path[where[v] + 1 :]
        else:
            where[v] = len(path)
            path.append(v)
    return path


def _rainbow_walks(graph: Graph, colors: tuple[int, ...], source: int) -> dict[int, list[int]]:
    """One rainbow path from ``source`` to every vertex it can reach that way.

    Explores ``(vertex, used colors)`` states; a state is dropped when the
    same vertex was already reached with a subset of its colors.
    """
    reached: list[list[int]] = [[] for _ in range(graph.n)]
    reached[source].append(0)
    parent: dict[tuple[int, int], Optional[tuple[int, int]]] = {(source, 0): None}
    found: dict[int, tuple[int, int]] = {source: (source, 0)}
    queue = deque([(source, 0)])
    while queue and len(found) < graph.n:
        v, mask = queue.popleft()
        for w, e in graph.adjacency[v]:
            bit = 1 << colors[e]
            if mask & bit or w == source:
                continue
            grown = mask | bit
            if any(old & grown == old for old in reached[w]):
                continue
            reached[w].append(grown)
            parent[(w, grown)] = (v, mask)
            found.setdefault(w, (w, grown))
            queue.append((w, grown))

    paths = {}
    for target, state in found.items():
        walk = []
        cursor: Optional[tuple[int, int]] = state
        while cursor is not None:
            walk.append(cursor[0])
            cursor = parent[cursor]
        paths[target] = loop_erase(walk[::-1])
    return paths


class RainbowCheck(BaseModel):
    """Verdict of :func:`is_rainbow_connected`."""

    ok: bool
    failing_pair: Optional[tuple[int, int]] = None
    witnesses: dict[str, list[int]] = {}


def _check_size(coloring: EdgeColoring, max_colors: Optional[int]) -> None:
    cap = get_settings().rainbow_max_colors if max_colors is None else max_colors
    if coloring.color_count > cap:
        raise TooLargeError(
            f"{coloring.color_count} colors exceed the exact cap of {cap}; use certificates"
        )


def _walks_by_source(
    graph: Graph, colors: tuple[int, ...], threads: int
) -> Iterable[dict[int, list[int]]]:
    """Rainbow paths from every source in order; lazy unless spread over threads."""
    if threads > 1 and graph.n > 1:
        return Parallel(n_jobs=threads, prefer="threads")(
            delayed(_rainbow_walks)(graph, colors, x) for x in range(graph.n)
        )
    return (_rainbow_walks(graph, colors, x) for x in range(graph.n))


def _first_failure(
    graph: Graph, colors: tuple[int, ...], threads: int = 1
) -> Optional[tuple[int, int]]:
    for x, paths in enumerate(_walks_by_source(graph, colors, threads)):
        missing = [y for y in range(x + 1, graph.n) if y not in paths]
        if missing:
            return x, missing[0]
    return None


def is_rainbow_connected(
    coloring: EdgeColoring,
    max_colors: Optional[int] = None,
    witnesses: bool = False,
    threads: int = 1,
) -> RainbowCheck:
    """Decide whether every pair is joined by a rainbow path.

    Args:
        coloring: the colored graph.
        max_colors: cap on distinct colors, defaults to the settings.
        witnesses: keep one path per pair, keyed ``"x-y"``.
        threads: parallel workers over sources.

    Raises:
        TooLargeError: above the color cap.
    """
    _check_size(coloring, max_colors)
    graph = coloring.graph
    if not witnesses:
        failure = _first_failure(graph, coloring.colors, threads)
        return RainbowCheck(ok=failure is None, failing_pair=failure)
    kept: dict[str, list[int]] = {}
    for x, paths in enumerate(_walks_by_source(graph, coloring.colors, threads)):
        for y in range(x + 1, graph.n):
            if y not in paths:
                return RainbowCheck(ok=False, failing_pair=(x, y), witnesses=kept)
            kept[f"{x}-{y}"] = paths[y]
    return RainbowCheck(ok=True, witnesses=kept)


def _restricted_growth(m: int, k: int) -> Iterator[list[int]]:
    """Colorings of ``m`` edges with at most ``k`` colors, one per relabeling class."""
    colors = [0] * m

    def extend(i: int, used: int) -> Iterator[list[int]]:
        if i == m:
            yield colors
            return
        for c in range(min(used + 1, k)):
            colors[i] = c
            yield from extend(i + 1, max(used, c + 1))

    if m == 0:
        yield colors
    else:
        yield from extend(0, 0)


def exact_rc(graph: Graph, max_edges: Optional[int] = None) -> int:
    """Smallest ``k`` such that some ``k``-edge-coloring is rainbow connected.

    The search starts at ``k = diam(G)``, a lower bound, and stops at the
    first ``k`` that works; ``k = m`` always does.

    Raises:
        NotConnectedError: for disconnected input.
        TooLargeError: above ``max_edges``.
    """
    cap = get_settings().exact_rc_max_edges if max_edges is None else max_edges
    if graph.m > cap:
        raise TooLargeError(f"{graph.m} edges exceed the exact rc cap of {cap}")
    if not graph.is_connected():
        raise NotConnectedError()
    if graph.n == 1:
        return 0
    _, diam, _ = radius_diameter_centers(graph)
    for k in range(diam, graph.m + 1):
        tried = 0
        for candidate in _restricted_growth(graph.m, k):
            tried += 1
            if _first_failure(graph, tuple(candidate)) is None:
                logging.info("rc=%d found after %d colorings", k, tried)
                return k
        logging.debug("No rainbow %d-coloring among %d candidates", k, tried)
    raise AssertionError("distinct colors on every edge are always rainbow")
