"""Tests for per-edge shortest cycles, eta and isometric cycles"""

import math

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.cycles.structure import (
    cycle_cover_report,
    eta,
    is_isometric_cycle,
    shortest_cycle_through_edge,
    shortest_cycle_witness,
    zeta_bruteforce,
)
from src.errors import TooLargeError
from src.generators.families import gen_random_bridgeless
from src.generators.named import (
    gen_complete,
    gen_cycle,
    gen_path,
    gen_petersen,
    gen_theta,
    gen_wheel,
)
from src.graphs.core import Graph
from src.metrics.bridges import is_bridgeless
from src.metrics.distances import girth


def bridgeless_graphs(n_max: int, extra_max: int):
    return st.builds(
        gen_random_bridgeless,
        n=st.integers(min_value=3, max_value=n_max),
        extra_ears=st.integers(min_value=0, max_value=extra_max),
        seed=st.integers(min_value=0, max_value=2**31 - 1),
    )


def test_eta_examples():
    assert eta(gen_complete(4)) == 3, "every K_4 edge is in a triangle"  # nosec: B101
    assert eta(gen_cycle(4)) == 4, "C_4"  # nosec: B101
    assert eta(gen_petersen()) == 5, "girth 5 and edge-transitive"  # nosec: B101
    assert eta(gen_theta([1, 2, 3])) == 4, "the long path closes a 4-cycle"  # nosec: B101
    assert eta(gen_path(3)) == math.inf, "bridges make eta infinite"  # nosec: B101


def test_shortest_cycle_through_edge_and_witness():
    g = gen_theta([1, 2, 3])
    assert shortest_cycle_through_edge(g, 0) == 3, "direct edge closes a triangle"  # nosec: B101
    witness = shortest_cycle_witness(g, 0)
    assert witness is not None and witness[0] == 0 and witness[-1] == 1, "u..v"  # nosec: B101
    assert shortest_cycle_witness(gen_path(3), 0) is None, "bridge"  # nosec: B101


def test_cycle_cover_report_serializes_infinity():
    report = cycle_cover_report(gen_path(3), witnesses=True)
    assert report.eta == "inf", "infinite eta written as a string"  # nosec: B101
    assert report.per_edge_cycle_len == ["inf", "inf"], "per edge"  # nosec: B101
    threaded = cycle_cover_report(gen_petersen(), threads=2)
    assert threaded.eta == 5 and len(threaded.per_edge_cycle_len) == 15, "Petersen"  # nosec: B101


def test_is_isometric_cycle():
    k4 = gen_complete(4)
    assert is_isometric_cycle(k4, [0, 1, 2]), "triangle"  # nosec: B101
    assert not is_isometric_cycle(k4, [0, 1, 2, 3]), "chords shorten the 4-cycle"  # nosec: B101
    with pytest.raises(ValueError, match="not a cycle"):
        is_isometric_cycle(gen_cycle(5), [0, 1, 3])


@pytest.mark.parametrize(
    "graph, expected",
    [
        (gen_cycle(5), 5),
        (gen_cycle(6), 6),
        (gen_complete(4), 3),
        (gen_petersen(), 5),
        (gen_wheel(5), 5),
        (gen_path(4), 0),
    ],
)
def test_zeta_bruteforce(graph, expected):
    assert zeta_bruteforce(graph) == expected, f"zeta of {graph!r}"  # nosec: B101


def test_zeta_refuses_large_graphs():
    with pytest.raises(TooLargeError, match="too large"):
        zeta_bruteforce(gen_cycle(6), max_n=5)


@settings(max_examples=30, deadline=None)
@given(bridgeless_graphs(40, 12))
def test_eta_at_least_girth(graph):
    assert eta(graph) >= girth(graph), f"on {graph.edges}"  # nosec: B101


@settings(max_examples=30, deadline=None)
@given(bridgeless_graphs(40, 12))
def test_witnesses_close_their_edge(graph):
    report = cycle_cover_report(graph, witnesses=True)
    for e, (path, length) in enumerate(zip(report.witness_cycles, report.per_edge_cycle_len)):
        assert {path[0], path[-1]} == set(graph.edges[e]), f"edge {e} ends"  # nosec: B101
        assert len(path) == length == len(set(path)), f"edge {e} length"  # nosec: B101
        steps = [graph.edge_id(a, b) for a, b in zip(path, path[1:])]
        assert None not in steps and e not in steps, f"edge {e} path"  # nosec: B101


def test_eta_at_most_zeta_on_every_small_graph():
    checked = 0
    for atlas_graph in nx.graph_atlas_g():
        graph = Graph.from_networkx(atlas_graph)
        if graph.m == 0 or not graph.is_connected() or not is_bridgeless(graph):
            continue
        assert eta(graph) <= zeta_bruteforce(graph), f"on {graph.edges}"  # nosec: B101
        checked += 1
    assert checked > 500, "every connected bridgeless graph up to 7 vertices"  # nosec: B101
