"""Layered ear processing shared by the orienter and the rainbow colorer.

Starting from the smallest center ``u``, layer ``i`` visits the vertices at
distance ``i`` that are not yet absorbed, in ascending order, and adds one
compatible ear through the leg to their smallest neighbor in the hull.
All ears of a layer are ears of the hull as it stood when the layer began.
"""

import logging
from dataclasses import dataclass, field

from src.cycles.structure import eta as eta_of
from src.ears.engine import Ear, EarContext, compatible_ear
from src.errors import BridgeError, NotConnectedError
from src.graphs.core import Graph
from src.metrics.bridges import bridges
from src.metrics.distances import bfs, distance_layers, radius_diameter_centers


def layer_budget(rad: int, eta: int, i: int) -> int:
    """Longest ear expected at layer ``i``: ``min{2(rad-i+1)+1, eta}``."""
    return min(2 * (rad - i + 1) + 1, eta)


@dataclass
class Layer:
    index: int
    budget: int
    ears: list[Ear] = field(default_factory=list)

    @property
    def longest(self) -> int:
        return max((ear.length for ear in self.ears), default=0)


@dataclass
class LayeredEars:
    """Everything the layered pass decided, in processing order."""

    graph: Graph
    center: int
    rad: int
    eta: int
    depth: tuple[int, ...]
    layers: list[Layer]

    def ear_edges(self) -> set[int]:
        return {e for layer in self.layers for ear in layer.ears for e in ear.edges}

    def over_budget(self) -> list[tuple[int, Ear]]:
        return [
            (layer.index, ear)
            for layer in self.layers
            for ear in layer.ears
            if ear.length > layer.budget
        ]


def check_strongly_orientable(graph: Graph) -> None:
    """Raise unless ``graph`` is connected and bridgeless."""
    if not graph.is_connected():
        raise NotConnectedError()
    cut = bridges(graph)
    if cut:
        raise BridgeError(cut)


def build_layers(graph: Graph) -> LayeredEars:
    """Run the layered ear pass.

    Raises:
        NotConnectedError: for disconnected input.
        BridgeError: when the graph has a bridge.
    """
    check_strongly_orientable(graph)
    rad, _, centers = radius_diameter_centers(graph)
    center = centers[0]
    eta = int(eta_of(graph))
    depth = tuple(int(d) for d in bfs(graph, center).dist)
    by_depth = distance_layers(graph, center)
    logging.info("Layered pass from center %d: rad=%d eta=%d", center, rad, eta)

    hull = {center}
    layers = []
    for i in range(1, rad + 1):
        layer = Layer(i, layer_budget(rad, eta, i))
        ctx = EarContext.start(graph, hull)
        for x in by_depth[i]:
            if x in hull or ctx.is_absorbed(x):
                continue
            y = min(w for w in graph.neighbors(x) if w in hull)
            ear = compatible_ear(graph, ctx, graph.edge_id(x, y))
            ctx.commit(ear)
            layer.ears.append(ear)
            logging.debug(
                "Layer %d: ear %s (length %d, budget %d, splice %s)",
                i,
                ear.vertices,
                ear.length,
                layer.budget,
                ear.spliced,
            )
            if ear.length > layer.budget:
                logging.warning(
                    "Layer %d: ear of length %d exceeds budget %d",
                    i,
                    ear.length,
                    layer.budget,
                )
        hull.update(ctx.positions)
        layers.append(layer)
        logging.info("Layer %d: %d ears, hull now %d vertices", i, len(layer.ears), len(hull))
    return LayeredEars(graph, center, rad, eta, depth, layers)
