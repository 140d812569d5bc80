"""Per-graph theorem reports.

Each entry records whether the hypotheses hold, the claimed bound, the value
measured on our constructions and a status: ``pass``, ``fail`` or
``skipped`` (hypotheses fail or were not asserted). Hypotheses are checked
exactly; conclusions are measured on :func:`orient` and
:func:`rainbow_color`, never on exhaustive optima.
"""

import logging
import math
from functools import cached_property
from typing import Iterable, Literal, Optional, Union

import pandas as pd
from pydantic import BaseModel
from tqdm import tqdm

from src.config import get_settings
from src.construction.orienter import orient, theorem2_bounds
from src.construction.rainbow import rainbow_color, theorem4_bound
from src.cycles.structure import eta, zeta_bruteforce
from src.errors import ConsistencyError
from src.graphs.core import EdgeColoring, Graph, Orientation
from src.metrics.bridges import bridges
from src.metrics.distances import (
    INF,
    bipartition,
    girth,
    k_step_neighborhood,
    radius_diameter_centers,
)
from src.oracles.orientations import directed_rad_diam

Status = Literal["pass", "fail", "skipped"]
Hypotheses = Literal["hold", "fail", "asserted", "unknown"]

NOT_ORIENTABLE = "needs a connected bridgeless graph with an edge"


class TheoremEntry(BaseModel):
    name: str
    hypotheses: Hypotheses
    bound: Optional[int] = None
    measured: Optional[int] = None
    status: Status
    note: str = ""


class GraphSummary(BaseModel):
    n: int
    m: int
    connected: bool
    bridgeless: bool
    rad: Optional[int] = None
    diam: Optional[int] = None
    eta: Optional[int] = None
    zeta: Optional[int] = None
    girth: Optional[int] = None
    min_degree: int
    bipartite: bool


class TheoremReport(BaseModel):
    graph: GraphSummary
    theorems: list[TheoremEntry]

    @property
    def failures(self) -> list[TheoremEntry]:
        return [t for t in self.theorems if t.status == "fail"]


def _compare(
    name: str,
    bound: int,
    measured: Optional[int],
    hypotheses: Hypotheses = "hold",
    note: str = "",
) -> TheoremEntry:
    status: Status = "pass" if measured is not None and measured <= bound else "fail"
    if status == "fail":
        logging.warning("%s violated: measured %s, bound %d", name, measured, bound)
    return TheoremEntry(
        name=name,
        hypotheses=hypotheses,
        bound=bound,
        measured=measured,
        status=status,
        note=note,
    )


def _skip_all(names: Iterable[str], note: str, hypotheses: Hypotheses = "fail") -> list:
    return [
        TheoremEntry(name=name, hypotheses=hypotheses, status="skipped", note=note)
        for name in names
    ]


class Measurements:
    """Lazily computed parameters and constructions of one graph."""

    def __init__(self, graph: Graph) -> None:
        self.graph = graph

    @cached_property
    def connected(self) -> bool:
        return self.graph.is_connected()

    @cached_property
    def bridgeless(self) -> bool:
        return not bridges(self.graph)

    @property
    def orientable(self) -> bool:
        return self.connected and self.bridgeless and self.graph.m > 0

    @cached_property
    def rad_diam(self) -> tuple[int, int]:
        rad, diam, _ = radius_diameter_centers(self.graph)
        return rad, diam

    @cached_property
    def eta(self) -> int:
        return int(eta(self.graph))

    @cached_property
    def zeta(self) -> Optional[int]:
        if self.graph.n > get_settings().zeta_max_n:
            return None
        return zeta_bruteforce(self.graph)

    @cached_property
    def orientation(self) -> Orientation:
        return orient(self.graph)[0]

    @cached_property
    def oriented(self) -> tuple[int, int]:
        measured = directed_rad_diam(self.orientation, get_settings().threads)
        if measured is None:
            raise ConsistencyError("constructed orientation is not strong")
        return measured

    @cached_property
    def coloring(self) -> EdgeColoring:
        return rainbow_color(self.graph)[0]

    def summary(self) -> GraphSummary:
        g = girth(self.graph)
        rad = diam = None
        if self.connected:
            rad, diam = self.rad_diam
        return GraphSummary(
            n=self.graph.n,
            m=self.graph.m,
            connected=self.connected,
            bridgeless=self.bridgeless,
            rad=rad,
            diam=diam,
            eta=self.eta if self.orientable else None,
            zeta=self.zeta if self.orientable else None,
            girth=None if g == INF else int(g),
            min_degree=self.graph.min_degree(),
            bipartite=bipartition(self.graph).bipartite,
        )


def _measure(graph: Union[Graph, Measurements]) -> Measurements:
    return graph if isinstance(graph, Measurements) else Measurements(graph)


def reference_bounds(graph: Union[Graph, Measurements]) -> dict[str, Optional[int]]:
    """Chvatal-Thomassen, eta-based and (small graphs only) zeta-based bounds."""
    g = _measure(graph)
    rad, _ = g.rad_diam
    thm2_rad, thm2_diam = theorem2_bounds(rad, g.eta)
    zeta_value = g.zeta
    thm3 = None
    if zeta_value is not None:
        thm3 = sum(min(2 * i + 1, zeta_value) for i in range(1, rad + 1))
    return {
        "ct_rad": rad * rad + rad,
        "ct_diam": 2 * rad * rad + 2 * rad,
        "thm2_rad": thm2_rad,
        "thm2_diam": thm2_diam,
        "thm4_colors": theorem4_bound(rad, g.eta),
        "thm3_colors": thm3,
    }


def check_construction_bounds(graph: Union[Graph, Measurements]) -> list[TheoremEntry]:
    """Our orientation and coloring against the eta bounds, and the eta
    bounds against the radius-only and zeta-based ones."""
    g = _measure(graph)
    names = [
        "orientation radius <= sum min{2i, eta-1}",
        "orientation diameter <= 2 sum min{2i, eta-1}",
        "rainbow colors <= sum min{2i+1, eta}",
        "eta bound <= Chvatal-Thomassen bound",
        "eta <= zeta",
        "eta color bound <= zeta color bound",
    ]
    if not g.orientable:
        return _skip_all(names, NOT_ORIENTABLE)
    ref = reference_bounds(g)
    entries = [
        _compare(names[0], int(ref["thm2_rad"] or 0), g.oriented[0]),
        _compare(names[1], int(ref["thm2_diam"] or 0), g.oriented[1]),
        _compare(names[2], int(ref["thm4_colors"] or 0), g.coloring.color_count),
        _compare(names[3], int(ref["ct_rad"] or 0), ref["thm2_rad"]),
    ]
    if g.zeta is None:
        note = f"n > {get_settings().zeta_max_n}, zeta not computed"
        return entries + _skip_all(names[4:], note, "unknown")
    return entries + [
        _compare(names[4], g.zeta, g.eta),
        _compare(names[5], int(ref["thm3_colors"] or 0), ref["thm4_colors"]),
    ]


def bipartite_dense_hypotheses(graph: Graph) -> bool:
    """Bipartite with every degree above half the opposite part's size."""
    parts = bipartition(graph)
    if not parts.bipartite or not parts.left or not parts.right:
        return False
    left_need = math.ceil(len(parts.right) / 2)
    right_need = math.ceil(len(parts.left) / 2)
    return all(graph.degree(v) > left_need for v in parts.left) and all(
        graph.degree(v) > right_need for v in parts.right
    )


def _measured_or_fail(
    g: Measurements, checks: list[tuple[str, int, str]], note: str = ""
) -> list[TheoremEntry]:
    """Compare named quantities (``rad``, ``eta``, ``orad``, ``odiam``,
    ``colors``) with their bounds; all fail when nothing can be built."""
    if not g.orientable:
        return [_compare(name, bound, None, note=NOT_ORIENTABLE) for name, bound, _ in checks]
    values = {
        "rad": lambda: g.rad_diam[0],
        "eta": lambda: g.eta,
        "orad": lambda: g.oriented[0],
        "odiam": lambda: g.oriented[1],
        "colors": lambda: g.coloring.color_count,
    }
    return [_compare(name, bound, values[key](), note=note) for name, bound, key in checks]


def check_bipartite_theorem(graph: Union[Graph, Measurements]) -> list[TheoremEntry]:
    """Dense bipartite graphs: rad <= 3, eta <= 4, oriented rad <= 9, rc <= 12."""
    g = _measure(graph)
    checks = [
        ("bipartite: rad <= 3", 3, "rad"),
        ("bipartite: eta <= 4", 4, "eta"),
        ("bipartite: oriented rad <= 9", 9, "orad"),
        ("bipartite: colors <= 12", 12, "colors"),
    ]
    if not bipartite_dense_hypotheses(g.graph):
        return _skip_all([c[0] for c in checks], "not bipartite with the degree condition")
    return _measured_or_fail(g, checks)


def check_regular_bipartite(graph: Union[Graph, Measurements]) -> list[TheoremEntry]:
    """``k``-regular bipartite with ``k`` above half a part: oriented rad <= 9, rc <= 12."""
    g = _measure(graph)
    checks = [
        ("regular bipartite: oriented rad <= 9", 9, "orad"),
        ("regular bipartite: colors <= 12", 12, "colors"),
    ]
    parts = bipartition(g.graph)
    degrees = {g.graph.degree(v) for v in range(g.graph.n)}
    holds = (
        parts.bipartite
        and len(degrees) == 1
        and len(parts.left) == len(parts.right)
        and min(degrees) > len(parts.left) / 2
    )
    if not holds:
        return _skip_all([c[0] for c in checks], "not k-regular bipartite with k > n/2")
    return _measured_or_fail(g, checks)


def check_general_theorems(graph: Union[Graph, Measurements], k: int = 2) -> list[TheoremEntry]:
    """Large ``k``-step neighborhoods (case i) and minimum degree above n/2 (case ii)."""
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    g = _measure(graph)
    n = g.graph.n
    case_i = [
        (f"|N_{k}| > n/2-1: rad <= {2 * k}", 2 * k, "rad"),
        (f"|N_{k}| > n/2-1: eta <= {2 * k + 1}", 2 * k + 1, "eta"),
        (f"|N_{k}| > n/2-1: oriented rad <= {4 * k * k}", 4 * k * k, "orad"),
        (f"|N_{k}| > n/2-1: colors <= {4 * k * k + 2 * k}", 4 * k * k + 2 * k, "colors"),
    ]
    holds = g.connected and all(
        len(k_step_neighborhood(g.graph, u, k)) > n / 2 - 1 for u in range(n)
    )
    if holds:
        entries = _measured_or_fail(g, case_i)
    else:
        entries = _skip_all([c[0] for c in case_i], f"some |N_{k}(u)| <= n/2 - 1")

    case_ii = [
        ("min degree > n/2: oriented rad <= 4", 4, "orad"),
        ("min degree > n/2: oriented diam <= 8", 8, "odiam"),
        ("min degree > n/2: colors <= 6", 6, "colors"),
    ]
    if n > 1 and g.graph.min_degree() > n / 2:
        return entries + _measured_or_fail(g, case_ii)
    return entries + _skip_all([c[0] for c in case_ii], "min degree <= n/2")


def girth_corollary_k(graph: Graph, strict: bool) -> Optional[int]:
    """Smallest ``k >= 1`` with ``delta (delta-1)^(k-1) > n/2 - 1`` and
    ``k <= g/2`` (``k < g/2`` when ``strict``)."""
    g = girth(graph)
    delta = graph.min_degree()
    if g == INF or delta < 1:
        return None
    k = 1
    while 2 * k < g if strict else 2 * k <= g:
        if delta * (delta - 1) ** (k - 1) > graph.n / 2 - 1:
            return k
        k += 1
    return None


def check_girth_corollary(graph: Union[Graph, Measurements]) -> list[TheoremEntry]:
    """Girth and minimum degree bound the radius: oriented rad <= 4k^2 and
    rc <= 4k^2 + 2k, with ``k`` chosen under the stricter ``k < g/2``."""
    g = _measure(graph)
    names = ["girth corollary: oriented rad <= 4k^2", "girth corollary: colors <= 4k^2+2k"]
    if not g.orientable:
        return _skip_all(names, NOT_ORIENTABLE)
    loose = girth_corollary_k(g.graph, strict=False)
    k = girth_corollary_k(g.graph, strict=True)
    note = f"k (k <= g/2) = {loose}, k (k < g/2) = {k}"
    if k is None:
        return _skip_all(names, note)
    checks = [(names[0], 4 * k * k, "orad"), (names[1], 4 * k * k + 2 * k, "colors")]
    return _measured_or_fail(g, checks, note)


def evaluate_asserted_bounds(
    graph: Union[Graph, Measurements],
    face_len: Optional[int] = None,
    edge_transitive: Optional[bool] = None,
) -> list[TheoremEntry]:
    """Bounds whose hypotheses (face lengths of a plane embedding,
    edge-transitivity) the caller vouches for; nothing here checks them."""
    g = _measure(graph)
    plane = [
        "plane, faces <= k: oriented rad <= rad(k-1)",
        "plane, faces <= k: oriented diam <= 2rad(k-1)",
        "plane, faces <= k: colors <= k rad",
    ]
    transitive = [
        "edge-transitive: oriented rad <= rad(g-1)",
        "edge-transitive: oriented diam <= 2rad(g-1)",
        "edge-transitive: colors <= rad g",
    ]
    entries = []
    for names, asserted, what in (
        (plane, face_len, "face length"),
        (transitive, edge_transitive, "edge-transitivity"),
    ):
        if not asserted:
            entries += _skip_all(names, f"{what} not asserted", "unknown")
            continue
        if not g.orientable:
            entries += _skip_all(names, NOT_ORIENTABLE, "asserted")
            continue
        rad = g.rad_diam[0]
        k = int(face_len) if names is plane else int(girth(g.graph))
        bounds = [rad * (k - 1), 2 * rad * (k - 1), rad * k]
        measured = [g.oriented[0], g.oriented[1], g.coloring.color_count]
        note = f"{what} asserted ({k})"
        entries += [
            _compare(name, bound, value, "asserted", note)
            for name, bound, value in zip(names, bounds, measured)
        ]
    return entries


def run_report(
    graph: Graph,
    k: int = 2,
    face_len: Optional[int] = None,
    edge_transitive: Optional[bool] = None,
) -> TheoremReport:
    """Every check on one graph."""
    g = Measurements(graph)
    theorems = (
        check_construction_bounds(g)
        + check_bipartite_theorem(g)
        + check_regular_bipartite(g)
        + check_general_theorems(g, k)
        + check_girth_corollary(g)
        + evaluate_asserted_bounds(g, face_len, edge_transitive)
    )
    report = TheoremReport(graph=g.summary(), theorems=theorems)
    if report.failures:
        logging.warning("%r: %d failed checks", graph, len(report.failures))
    return report


def run_corpus(graphs: Iterable[Graph], k: int = 2, progress: bool = False) -> list[TheoremReport]:
    """One :class:`TheoremReport` per graph, in input order."""
    return [run_report(g, k) for g in tqdm(list(graphs), desc="graphs", disable=not progress)]


def reports_to_table(reports: list[TheoremReport]) -> pd.DataFrame:
    """One row per (graph, theorem) pair."""
    columns = ["graph", "n", "m", "theorem", "hypotheses", "bound", "measured", "status"]
    rows = [
        [index, report.graph.n, report.graph.m]
        + [entry.name, entry.hypotheses, entry.bound, entry.measured, entry.status]
        for index, report in enumerate(reports)
        for entry in report.theorems
    ]
    return pd.DataFrame(rows, columns=columns)
