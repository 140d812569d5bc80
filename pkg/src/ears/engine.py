"""Ear search relative to a hull of already-processed vertices.

An ``H``-ear is a path whose two feet lie in ``H`` and whose interior avoids
``H``. The construction processes ears layer by layer; inside a layer a new
ear may reach vertices absorbed earlier in the same layer only by splicing
in the remaining segment of one earlier ear, so the overlap is one
continuous segment ending at a foot and agrees with every earlier
direction and color.
"""

import heapq
import logging
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional

from src.errors import BridgeLegError, ConsistencyError
from src.graphs.core import Graph

FORWARD = "forward"
BACKWARD = "backward"


@dataclass(frozen=True)
class Ear:
    """A path ``u_0, ..., u_k`` listed in travel order.

    ``shared_prefix`` / ``shared_suffix`` count the leading / trailing edges
    taken over from an earlier ear; ``spliced`` names the splice kind.
    """

    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    spliced: Optional[str] = None
    shared_prefix: int = 0
    shared_suffix: int = 0

    def __post_init__(self) -> None:
        k = len(self.edges)
        if len(self.vertices) != k + 1:
            raise ValueError("an ear has one more vertex than edges")
        if k < 2:
            raise ValueError(f"ear length {k} < 2")
        interior = self.vertices[1:-1]
        if len(set(interior)) != len(interior) or set(self.feet) & set(interior):
            raise ValueError(f"ear {self.vertices} repeats a vertex")
        if self.closed and k < 3:
            raise ValueError(f"closed ear {self.vertices} shorter than 3")

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def feet(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    @property
    def closed(self) -> bool:
        return self.vertices[0] == self.vertices[-1]

    @property
    def legs(self) -> tuple[int, int]:
        return self.edges[0], self.edges[-1]

    @property
    def interior(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    @property
    def split(self) -> int:
        """Edges ``1..split`` take labels counted from the first foot, the rest
        labels counted from the last foot."""
        s = math.ceil(self.length / 2)
        s = max(s, self.shared_prefix)
        return min(s, self.length - self.shared_suffix)

    def reversed(self) -> "Ear":
        return Ear(
            self.vertices[::-1],
            self.edges[::-1],
            self.spliced,
            self.shared_suffix,
            self.shared_prefix,
        )


def _ear_from_vertices(graph: Graph, vertices: list[int], **kwargs) -> Ear:
    edges = []
    for a, b in zip(vertices, vertices[1:]):
        e = graph.edge_id(a, b)
        if e is None:
            raise ValueError(f"{a}-{b} is not an edge")
        edges.append(e)
    return Ear(tuple(vertices), tuple(edges), **kwargs)


@dataclass
class EarContext:
    """Hull of one layer plus the ears committed so far in that layer.

    Ears are stored in travel order, so ``tail`` gives every committed edge
    its direction; ``positions`` maps each absorbed vertex to the
    ``(ear index, position)`` pairs where it occurs as an interior vertex.
    """

    graph: Graph
    hull: frozenset
    ears: list[Ear] = field(default_factory=list)
    tail: dict[int, int] = field(default_factory=dict)
    positions: dict[int, list[tuple[int, int]]] = field(default_factory=dict)

    @classmethod
    def start(cls, graph: Graph, hull: Iterable[int]) -> "EarContext":
        return cls(graph, frozenset(hull))

    def is_absorbed(self, v: int) -> bool:
        return v in self.positions

    def commit(self, ear: Ear) -> None:
        """Record ``ear``; shared edges must keep their earlier direction."""
        index = len(self.ears)
        for a, e in zip(ear.vertices, ear.edges):
            if e in self.tail and self.tail[e] != a:
                raise ConsistencyError(f"edge {e} committed in the opposite direction")
            self.tail[e] = a
        for p, v in enumerate(ear.vertices[1:-1], start=1):
            self.positions.setdefault(v, []).append((index, p))
        self.ears.append(ear)

    def splice_options(self, w: int) -> list[tuple[int, str, int, int]]:
        """Ways to finish a new ear at the absorbed vertex ``w``.

        Returns:
            list of ``(cost, kind, ear index, position)``: ``forward`` follows
            the earlier ear to its last foot, ``backward`` comes from its
            first foot. Only segments lying entirely on one side of the
            earlier ear's split qualify.
        """
        options = []
        for index, p in self.positions.get(w, []):
            ear = self.ears[index]
            if p >= ear.split:
                options.append((ear.length - p, FORWARD, index, p))
            if p <= ear.split:
                options.append((p, BACKWARD, index, p))
        return sorted(options, key=lambda o: (o[0], o[1] != FORWARD, o[2]))


def legs(graph: Graph, hull: Iterable[int]) -> set[int]:
    """Edges with exactly one endpoint in ``hull``."""
    inside = set(hull)
    return {e for e, (u, v) in enumerate(graph.edges) if (u in inside) != (v in inside)}


def _orient_leg(graph: Graph, hull: frozenset, e: int) -> tuple[int, int]:
    u, v = graph.edges[e]
    if (u in hull) == (v in hull):
        raise ValueError(f"edge {e} = {graph.edges[e]} is not a leg of the hull")
    return (u, v) if u in hull else (v, u)


def _remaining_cost(graph: Graph, ctx: EarContext, leg: int) -> dict[int, float]:
    """Cheapest completion cost from every fresh vertex to a foot.

    Fresh vertices are those outside the hull and not yet absorbed. A fresh
    vertex finishes at cost 1 on a hull neighbor (the leg itself excluded),
    at ``1 + splice cost`` on an absorbed neighbor, or continues through a
    fresh neighbor.
    """
    rem: dict[int, float] = {}
    heap: list[tuple[float, int]] = []
    for v in range(graph.n):
        if v in ctx.hull or ctx.is_absorbed(v):
            continue
        best = math.inf
        for w, e in graph.adjacency[v]:
            if e == leg:
                continue
            if w in ctx.hull:
                best = min(best, 1)
            elif ctx.is_absorbed(w):
                best = min(best, 1 + ctx.splice_options(w)[0][0])
        rem[v] = best
        if best < math.inf:
            heapq.heappush(heap, (best, v))
    done: set[int] = set()
    while heap:
        cost, v = heapq.heappop(heap)
        if v in done or cost > rem[v]:
            continue
        done.add(v)
        for w, e in graph.adjacency[v]:
            if w in rem and e != leg and cost + 1 < rem[w]:
                rem[w] = cost + 1
                heapq.heappush(heap, (cost + 1, w))
    return rem


def _search(graph: Graph, ctx: EarContext, e: int) -> Ear:
    y, x = _orient_leg(graph, ctx.hull, e)
    if ctx.is_absorbed(x):
        raise ValueError(f"vertex {x} already absorbed")
    rem = _remaining_cost(graph, ctx, e)
    if rem[x] == math.inf:
        raise BridgeLegError(e)

    # Greedy walk: smallest admissible neighbor at each step.
    fresh = [x]
    while True:
        v = fresh[-1]
        step = None
        for w, f in graph.adjacency[v]:
            if f == e:
                continue
            if w in ctx.hull:
                if rem[v] == 1:
                    step = ("hull", w)
            elif ctx.is_absorbed(w):
                if rem[v] == 1 + ctx.splice_options(w)[0][0]:
                    step = ("splice", w)
            elif rem.get(w) == rem[v] - 1:
                step = ("fresh", w)
            if step:
                break
        if step is None:
            raise ConsistencyError(f"no admissible step from {v}")
        kind, w = step
        if kind == "fresh":
            fresh.append(w)
            continue
        if kind == "hull":
            return _ear_from_vertices(graph, [y] + fresh + [w])
        _, direction, index, p = ctx.splice_options(w)[0]
        earlier = ctx.ears[index].vertices
        if direction == FORWARD:
            vertices = [y] + fresh + list(earlier[p:])
            return _ear_from_vertices(
                graph,
                vertices,
                spliced=FORWARD,
                shared_suffix=len(earlier) - 1 - p,
            )
        vertices = list(earlier[: p + 1]) + fresh[::-1] + [y]
        return _ear_from_vertices(graph, vertices, spliced=BACKWARD, shared_prefix=p)


def optimal_ear(graph: Graph, hull: Iterable[int], e: int) -> Ear:
    """A shortest ``hull``-ear through the leg ``e``, listed from its hull end.

    Ties go to the lexicographically smallest vertex sequence.

    Raises:
        BridgeLegError: when no ear contains ``e``.
    """
    return _search(graph, EarContext.start(graph, hull), e)


def compatible_ear(graph: Graph, ctx: EarContext, e: int) -> Ear:
    """Shortest ear through ``e`` that agrees with the ears in ``ctx``.

    The ear is returned in travel order: it starts at the hull end of ``e``
    unless it splices in the start of an earlier ear, in which case it ends
    there. With nothing committed this is :func:`optimal_ear`.
    """
    ear = _search(graph, ctx, e)
    if ear.spliced:
        reference = optimal_ear(graph, ctx.hull, e)
        logging.debug(
            "Leg %d: %s splice, length %d (unconstrained optimum %d)",
            e,
            ear.spliced,
            ear.length,
            reference.length,
        )
        if ear.length > reference.length:
            logging.warning(
                "Leg %d: compatible ear length %d exceeds optimum %d",
                e,
                ear.length,
                reference.length,
            )
    return ear
