"""Rainbow colorings with at most ``sum_{i=1..rad} min{2i+1, eta}`` colors.

Layer ``i`` owns a block of ``L_i`` colors, ``L_i`` the layer budget (or the
longest ear if that is larger). Inside an ear the first ``split`` edges take
the block's lowest colors counting up from the first foot and the remaining
edges take its highest colors counting down from the last foot, so colors
strictly increase along every ear. Edges on no ear get the smallest color.
"""

import logging
import math
from typing import Iterator, Mapping, Optional, Sequence

from pydantic import BaseModel

from src.construction.layers import build_layers
from src.ears.engine import Ear
from src.errors import ConsistencyError
from src.graphs.core import EdgeColoring, Graph
from src.oracles.rainbow import loop_erase


def theorem4_bound(rad: int, eta: int) -> int:
    """``sum_{i=1..rad} min{2i+1, eta}``."""
    if rad < 0:
        raise ValueError(f"rad must be nonnegative, got {rad}")
    if rad == 0:
        return 0
    if eta < 3:
        raise ValueError(f"eta must be at least 3, got {eta}")
    return sum(min(2 * i + 1, eta) for i in range(1, rad + 1))


def symmetric_color(
    ear: Ear,
    pool_alpha: Sequence[int],
    pool_beta: Sequence[int],
    committed: Optional[Mapping[int, int]] = None,
) -> list[int]:
    """Colors for the edges of ``ear`` in travel order.

    Edge ``j`` (1-based) gets ``pool_alpha[j-1]`` for ``j <= ear.split`` and
    ``pool_beta[ear.length-j]`` otherwise: for a fresh ear of length 5 that
    is ``a1, a2, a3, b2, b1``.

    Raises:
        ValueError: when a pool is too small.
        ConsistencyError: when an edge already carries a different color.
    """
    split = ear.split
    if len(pool_alpha) < split or len(pool_beta) < ear.length - split:
        raise ValueError(
            f"pool too small for an ear of length {ear.length}: "
            f"{len(pool_alpha)}+{len(pool_beta)} colors"
        )
    colors = [
        pool_alpha[j - 1] if j <= split else pool_beta[ear.length - j]
        for j in range(1, ear.length + 1)
    ]
    for e, c in zip(ear.edges, colors):
        if committed is not None and e in committed and committed[e] != c:
            raise ConsistencyError(f"edge {e} recolored {committed[e]} -> {c}")
    return colors


class ColoredEar(BaseModel):
    vertices: list[int]
    edges: list[int]
    colors: list[int]
    spliced: Optional[str] = None


class ColorLayer(BaseModel):
    i: int
    budget: int
    pool_alpha: list[int]
    pool_beta: list[int]
    ears: list[ColoredEar]


class ColorTrace(BaseModel):
    """Decisions of one :func:`rainbow_color` run, in final color ids."""

    n: int
    center: int
    rad: int
    eta: int
    layers: list[ColorLayer]
    completion_color: Optional[int]
    completed_edges: list[int]
    total_colors: int
    bound: int


def rainbow_color(graph: Graph) -> tuple[EdgeColoring, ColorTrace]:
    """Rainbow-color a connected bridgeless graph.

    Returns:
        tuple: the coloring and its trace.

    Raises:
        NotConnectedError: for disconnected input.
        BridgeError: when the graph has a bridge.
    """
    layered = build_layers(graph)
    raw: dict[int, int] = {}
    pools = []
    base = 0
    for layer in layered.layers:
        size = max(layer.budget, layer.longest)
        if size > layer.budget:
            logging.warning("Layer %d: color block widened to %d", layer.index, size)
        alpha = [base + p for p in range(math.ceil(size / 2))]
        beta = [base + size - d for d in range(1, size // 2 + 1)]
        pools.append((alpha, beta))
        for ear in layer.ears:
            for e, c in zip(ear.edges, symmetric_color(ear, alpha, beta, raw)):
                raw[e] = c
        base += size

    completed = [e for e in range(graph.m) if e not in raw]
    low = min(raw.values(), default=0)
    for e in completed:
        raw[e] = low
    coloring = EdgeColoring.canonical(graph, [raw[e] for e in range(graph.m)])
    relabel = {raw[e]: coloring.colors[e] for e in range(graph.m)}

    layers = []
    for layer, (alpha, beta) in zip(layered.layers, pools):
        layers.append(
            ColorLayer(
                i=layer.index,
                budget=layer.budget,
                pool_alpha=[relabel[c] for c in alpha if c in relabel],
                pool_beta=[relabel[c] for c in beta if c in relabel],
                ears=[
                    ColoredEar(
                        vertices=list(ear.vertices),
                        edges=list(ear.edges),
                        colors=[coloring.colors[e] for e in ear.edges],
                        spliced=ear.spliced,
                    )
                    for ear in layer.ears
                ],
            )
        )
    bound = theorem4_bound(layered.rad, layered.eta)
    trace = ColorTrace(
        n=graph.n,
        center=layered.center,
        rad=layered.rad,
        eta=layered.eta,
        layers=layers,
        completion_color=relabel[low] if completed else None,
        completed_edges=completed,
        total_colors=coloring.color_count,
        bound=bound,
    )
    logging.info("Colored %r with %d colors (bound %d)", graph, coloring.color_count, bound)
    if coloring.color_count > bound:
        logging.warning("Coloring uses %d colors, above the bound %d", coloring.color_count, bound)
    return coloring, trace


class RainbowCertificate(BaseModel):
    pair: tuple[int, int]
    path: list[int]
    colors: list[int]


class _Placement:
    """Where each vertex joined the hull: layer, ear and position."""

    def __init__(self, graph: Graph, trace: ColorTrace) -> None:
        if trace.n != graph.n:
            raise ValueError(f"trace is for {trace.n} vertices, graph has {graph.n}")
        self.graph = graph
        self.layer = {trace.center: 0}
        self.spot: dict[int, tuple[ColoredEar, int]] = {}
        self.color: dict[int, int] = {}
        for layer in trace.layers:
            for ear in layer.ears:
                for e, c in zip(ear.edges, ear.colors):
                    self.color[e] = c
                for p, v in enumerate(ear.vertices[1:-1], start=1):
                    if v not in self.layer:
                        self.layer[v] = layer.i
                        self.spot[v] = (ear, p)
        missing = [v for v in range(graph.n) if v not in self.layer]
        if missing:
            raise ValueError(f"trace does not place vertices {missing}")

    def key(self, v: int) -> int:
        """Color of the edge entering ``v`` from the first foot of its ear."""
        ear, p = self.spot[v]
        return ear.colors[p - 1]

    def walk(self, a: int, b: int) -> list[int]:
        """A walk from ``a`` to ``b`` using no color twice."""
        if a == b:
            return [a]
        j = max(self.layer[a], self.layer[b])
        if self.layer[a] < j:
            return self.walk(b, a)[::-1]
        ear_a, p_a = self.spot[a]
        if self.layer[b] < j:
            down = ear_a.vertices[p_a::-1]
            return down + self.walk(down[-1], b)[1:]
        ear_b, p_b = self.spot[b]
        if ear_a is ear_b:
            lo, hi = sorted((p_a, p_b))
            segment = ear_a.vertices[lo : hi + 1]
            return segment if p_a == lo else segment[::-1]
        if self.key(a) <= self.key(b):
            first = ear_a.vertices[p_a::-1]
            last = ear_b.vertices[p_b:][::-1]
        else:
            first = ear_a.vertices[p_a:]
            last = ear_b.vertices[: p_b + 1]
        middle = self.walk(first[-1], last[0])
        return first + middle[1:] + last[1:]


def extract_certificate(graph: Graph, trace: ColorTrace, x: int, y: int) -> RainbowCertificate:
    """A rainbow ``x``-``y`` path read off the trace.

    Two vertices of the same layer on different ears meet inside the
    earlier hull: the one whose entering color is smaller walks back to its
    first foot, the other forward to its last foot, so their colors fall on
    opposite sides of a threshold.

    Raises:
        ValueError: when the trace does not fit the graph.
        ConsistencyError: when the resulting path repeats a color.
    """
    return _certificate(_Placement(graph, trace), x, y)


def _certificate(placement: _Placement, x: int, y: int) -> RainbowCertificate:
    graph = placement.graph
    path = loop_erase(placement.walk(x, y))
    colors = []
    for a, b in zip(path, path[1:]):
        e = graph.edge_id(a, b)
        if e is None or e not in placement.color:
            raise ValueError(f"trace edge {a}-{b} is not an ear edge of the graph")
        colors.append(placement.color[e])
    if len(set(colors)) != len(colors):
        raise ConsistencyError(f"certificate for ({x}, {y}) repeats a color: {colors}")
    return RainbowCertificate(pair=(x, y), path=path, colors=colors)


class CertificateReport(BaseModel):
    pairs_checked: int
    failures: int
    first_failure: Optional[tuple[int, int]] = None

    @property
    def ok(self) -> bool:
        return self.failures == 0


def verify_coloring_certificates(
    graph: Graph, coloring: EdgeColoring, trace: ColorTrace
) -> CertificateReport:
    """Extract and check a certificate for every pair ``x < y``.

    A certificate fails when extraction breaks down, when it is not a path
    from ``x`` to ``y``, or when its colors disagree with ``coloring``.
    """
    placement = _Placement(graph, trace)
    failures = 0
    first: Optional[tuple[int, int]] = None
    pairs = 0
    for x in range(graph.n):
        for y in range(x + 1, graph.n):
            pairs += 1
            try:
                cert = _certificate(placement, x, y)
                good = (
                    cert.path[0] == x
                    and cert.path[-1] == y
                    and coloring.path_colors(cert.path) == cert.colors
                )
            except (ValueError, ConsistencyError) as error:
                logging.debug("Certificate (%d, %d) failed: %s", x, y, error)
                good = False
            if not good:
                failures += 1
                first = first or (x, y)
    report = CertificateReport(pairs_checked=pairs, failures=failures, first_failure=first)
    logging.info("Certificates: %d pairs, %d failures", pairs, failures)
    return report


def all_certificates(graph: Graph, trace: ColorTrace) -> Iterator[RainbowCertificate]:
    """Certificates for every pair ``x < y`` in lexicographic order."""
    placement = _Placement(graph, trace)
    for x in range(graph.n):
        for y in range(x + 1, graph.n):
            yield _certificate(placement, x, y)
