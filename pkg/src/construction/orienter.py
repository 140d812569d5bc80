"""Strong orientations with radius and diameter bounded through eta.

Every ear of the layered pass becomes a directed path in travel order.
Edges left over afterwards point from the smaller BFS depth (from the
center) to the larger; ties go from the smaller vertex id to the larger.
"""

import logging
from typing import Optional

from pydantic import BaseModel

from src.construction.layers import LayeredEars, build_layers
from src.cycles.structure import eta as eta_of
from src.ears.engine import Ear
from src.graphs.core import Graph, Orientation
from src.metrics.distances import radius_diameter_centers
from src.oracles.orientations import directed_distances_from, directed_rad_diam


def theorem2_bounds(rad: int, eta: int) -> tuple[int, int]:
    """``(sum_{i=1..rad} min{2i, eta-1}, twice that)``.

    Raises:
        ValueError: for negative ``rad`` or, when ``rad > 0``, ``eta < 3``.
    """
    if rad < 0:
        raise ValueError(f"rad must be nonnegative, got {rad}")
    if rad == 0:
        return 0, 0
    if eta < 3:
        raise ValueError(f"eta must be at least 3, got {eta}")
    bound = sum(min(2 * i, eta - 1) for i in range(1, rad + 1))
    return bound, 2 * bound


class EarRecord(BaseModel):
    vertices: list[int]
    legs: list[int]
    closed: bool
    length: int
    spliced: Optional[str] = None


class LayerRecord(BaseModel):
    i: int
    budget: int
    ears: list[EarRecord]


class OrientBounds(BaseModel):
    rad_bound: int
    diam_bound: int


class OrientTrace(BaseModel):
    """Decisions of one :func:`orient` run."""

    center: int
    rad: int
    eta: int
    layers: list[LayerRecord]
    completed_edges: list[list[int]]
    bounds: OrientBounds


def ear_record(ear: Ear) -> EarRecord:
    return EarRecord(
        vertices=list(ear.vertices),
        legs=list(ear.legs),
        closed=ear.closed,
        length=ear.length,
        spliced=ear.spliced,
    )


def completion_tail(layered: LayeredEars, e: int) -> int:
    """Tail of a non-ear edge: lower depth first, then lower id."""
    a, b = layered.graph.edges[e]
    return min((a, b), key=lambda v: (layered.depth[v], v))


def orient(graph: Graph) -> tuple[Orientation, OrientTrace]:
    """Strongly orient a connected bridgeless graph.

    Returns:
        tuple: the orientation and its trace.

    Raises:
        NotConnectedError: for disconnected input.
        BridgeError: when the graph has a bridge.
    """
    layered = build_layers(graph)
    tails: dict[int, int] = {}
    for layer in layered.layers:
        for ear in layer.ears:
            for a, e in zip(ear.vertices, ear.edges):
                tails[e] = a

    completed = []
    for e in range(graph.m):
        if e not in tails:
            tails[e] = completion_tail(layered, e)
            completed.append([tails[e], graph.other(e, tails[e])])
    orientation = Orientation(graph, [tails[e] == graph.edges[e][0] for e in range(graph.m)])

    rad_bound, diam_bound = theorem2_bounds(layered.rad, layered.eta)
    trace = OrientTrace(
        center=layered.center,
        rad=layered.rad,
        eta=layered.eta,
        layers=[
            LayerRecord(
                i=layer.index,
                budget=layer.budget,
                ears=[ear_record(ear) for ear in layer.ears],
            )
            for layer in layered.layers
        ],
        completed_edges=completed,
        bounds=OrientBounds(rad_bound=rad_bound, diam_bound=diam_bound),
    )
    logging.info(
        "Oriented %r: %d ear edges, %d completed, bounds %d/%d",
        graph,
        graph.m - len(completed),
        len(completed),
        rad_bound,
        diam_bound,
    )
    return orientation, trace


class OrientationReport(BaseModel):
    """Measured quantities of an orientation against its bounds."""

    strong: bool
    rad: Optional[int]
    diam: Optional[int]
    center_out_ecc: Optional[int]
    rad_bound: Optional[int]
    diam_bound: Optional[int]
    ear_budgets_ok: Optional[bool]
    rad_ok: bool
    diam_ok: bool

    @property
    def passed(self) -> bool:
        return self.strong and self.rad_ok and self.diam_ok and self.ear_budgets_ok is not False


def verify_orientation_bounds(
    graph: Graph,
    orientation: Orientation,
    trace: Optional[OrientTrace] = None,
    threads: int = 1,
) -> OrientationReport:
    """Measure ``orientation`` and compare it with the eta bounds.

    With the trace of the run that built ``orientation``, the recorded
    bounds are used and the out-eccentricity of the recorded center and the
    ear budgets are checked too. Without one, the bounds come from the
    graph's own radius and eta. ``threads`` spreads the per-source BFS.
    """
    if orientation.graph != graph:
        raise ValueError("orientation belongs to a different graph")
    measured = directed_rad_diam(orientation, threads)
    strong = measured is not None
    rad, diam = measured if measured is not None else (None, None)
    center_ecc: Optional[int] = None
    budgets_ok: Optional[bool] = None
    rad_bound: Optional[int] = None
    diam_bound: Optional[int] = None
    if trace is not None:
        rad_bound, diam_bound = trace.bounds.rad_bound, trace.bounds.diam_bound
        if strong:
            center_ecc = int(max(directed_distances_from(orientation, trace.center)))
        budgets_ok = all(
            ear.length <= layer.budget for layer in trace.layers for ear in layer.ears
        )
    elif strong:
        rad_bound, diam_bound = theorem2_bounds(
            radius_diameter_centers(graph, threads)[0], int(eta_of(graph))
        )

    rad_ok = diam_ok = strong
    if strong and rad_bound is not None and diam_bound is not None:
        rad_ok = int(rad or 0) <= rad_bound and int(center_ecc or 0) <= rad_bound
        diam_ok = int(diam or 0) <= diam_bound
    report = OrientationReport(
        strong=strong,
        rad=rad,
        diam=diam,
        center_out_ecc=center_ecc,
        rad_bound=rad_bound,
        diam_bound=diam_bound,
        ear_budgets_ok=budgets_ok,
        rad_ok=rad_ok,
        diam_ok=diam_ok,
    )
    if not report.passed:
        logging.warning("Orientation check failed: %s", report.json())
    return report
