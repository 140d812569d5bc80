"""Property tests on seeded random bridgeless graphs"""

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from src.construction.layers import build_layers
from src.construction.orienter import orient, verify_orientation_bounds
from src.construction.rainbow import rainbow_color, verify_coloring_certificates
from src.cycles.structure import eta, zeta_bruteforce
from src.ears.engine import BACKWARD, legs, optimal_ear
from src.generators.families import gen_random_bridgeless
from src.graphs.core import Graph, Orientation
from src.metrics.distances import k_step_neighborhood, radius_diameter_centers
from src.oracles.orientations import (
    directed_distances_from,
    directed_rad_diam,
    optimal_oriented_diameter,
)
from src.oracles.rainbow import exact_rc, is_rainbow_connected


def graphs(n_max: int, extra_max: int):
    return st.builds(
        gen_random_bridgeless,
        n=st.integers(min_value=3, max_value=n_max),
        extra_ears=st.integers(min_value=0, max_value=extra_max),
        seed=st.integers(min_value=0, max_value=2**31 - 1),
    )


@settings(max_examples=40, deadline=None)
@given(graphs(30, 10))
def test_orientation_bounds(graph):
    orientation, trace = orient(graph)
    report = verify_orientation_bounds(graph, orientation, trace)
    assert report.passed, f"{report} on {graph.edges}"  # nosec: B101


@settings(max_examples=40, deadline=None)
@given(graphs(30, 10))
def test_rainbow_bound_and_certificates(graph):
    coloring, trace = rainbow_color(graph)
    assert coloring.color_count <= trace.bound, f"too many colors on {graph.edges}"  # nosec: B101
    report = verify_coloring_certificates(graph, coloring, trace)
    assert report.ok, f"pair {report.first_failure} on {graph.edges}"  # nosec: B101
    if coloring.color_count <= 10:
        assert is_rainbow_connected(coloring).ok, "the oracle agrees"  # nosec: B101


@settings(max_examples=25, deadline=None)
@given(graphs(10, 4))
def test_eta_at_most_zeta(graph):
    assert eta(graph) <= zeta_bruteforce(graph), "isometric cycles are long"  # nosec: B101


@settings(max_examples=15, deadline=None)
@given(graphs(8, 2))
def test_exhaustive_never_worse(graph):
    if graph.m > 12:
        return
    best = optimal_oriented_diameter(graph, max_edges=12)
    ours = directed_rad_diam(orient(graph)[0])
    assert best.best_diameter <= ours[1], "optimum at most the construction"  # nosec: B101


@settings(max_examples=10, deadline=None)
@given(graphs(5, 1))
def test_rainbow_connection_sandwich(graph):
    if graph.m > 7:
        return
    diam = radius_diameter_centers(graph)[1]
    rc = exact_rc(graph, max_edges=7)
    assert diam <= rc <= rainbow_color(graph)[0].color_count, "diam <= rc <= ours"  # nosec: B101


@settings(max_examples=30, deadline=None)
@given(graphs(30, 10))
def test_completion_never_lengthens_distances(graph):
    orientation, _ = orient(graph)
    kept = build_layers(graph).ear_edges()
    ear_only = Orientation.from_arcs(
        graph.subgraph_by_edges(kept), [orientation.arcs()[e] for e in sorted(kept)]
    )
    for s in range(graph.n):
        full = directed_distances_from(orientation, s)
        partial = directed_distances_from(ear_only, s)
        assert all(a <= b for a, b in zip(full, partial)), f"source {s}"  # nosec: B101


@settings(max_examples=30, deadline=None)
@given(graphs(25, 6), st.integers(min_value=0, max_value=2**31 - 1))
def test_extra_arcs_never_hurt(graph, seed):
    rng = np.random.default_rng(seed)
    missing = [
        (a, b) for a in range(graph.n) for b in range(a + 1, graph.n) if not graph.has_edge(a, b)
    ]
    picked = [missing[i] for i in rng.permutation(len(missing))[: graph.n // 2]]
    flips = rng.random(len(picked)) < 0.5
    chords = [(b, a) if flip else (a, b) for (a, b), flip in zip(picked, flips)]
    superset = Graph(graph.n, list(graph.edges) + picked)
    base = orient(graph)[0]
    extended = Orientation.from_arcs(superset, base.arcs() + chords)
    rad, diam = directed_rad_diam(base)
    rad_ext, diam_ext = directed_rad_diam(extended)
    assert rad_ext <= rad and diam_ext <= diam, "arcs only shorten paths"  # nosec: B101


@settings(max_examples=30, deadline=None)
@given(graphs(40, 12))
def test_optimal_ears_around_a_center(graph):
    rad, _, centers = radius_diameter_centers(graph)
    eta_value = eta(graph)
    for i in range(rad):
        hull = k_step_neighborhood(graph, centers[0], i, closed=True)
        limit = min(2 * (rad - i) + 1, eta_value)
        for e in legs(graph, hull):
            length = optimal_ear(graph, hull, e).length
            assert length <= limit, f"leg {e} at i={i}: {length} > {limit}"  # nosec: B101


@settings(max_examples=30, deadline=None)
@given(graphs(40, 12))
def test_compatible_ears_no_longer_than_optimal(graph):
    layered = build_layers(graph)
    hull = {layered.center}
    for layer in layered.layers:
        for ear in layer.ears:
            leg = ear.edges[-1] if ear.spliced == BACKWARD else ear.edges[0]
            best = optimal_ear(graph, hull, leg).length
            assert ear.length <= best, f"layer {layer.index}: {ear.vertices}"  # nosec: B101
        hull.update(v for ear in layer.ears for v in ear.vertices)
