"""Tests for the exhaustive orientation search and the rainbow oracles"""

import pytest

from src.construction.orienter import orient
from src.errors import NotConnectedError, TooLargeError
from src.generators.families import gen_extremal_rc, gen_triangle_tree
from src.generators.named import gen_complete, gen_cycle, gen_path, gen_petersen
from src.graphs.core import EdgeColoring, Graph, Orientation
from src.oracles.orientations import (
    directed_eccentricities,
    directed_rad_diam,
    is_strongly_connected,
    optimal_oriented_diameter,
)
from src.oracles.rainbow import exact_rc, is_rainbow_connected, loop_erase


def test_directed_cycle():
    g = gen_cycle(4)
    cycle = Orientation(g, [True] * 4)
    assert is_strongly_connected(cycle), "directed cycle"  # nosec: B101
    assert directed_eccentricities(cycle) == [3, 3, 3, 3], "every vertex"  # nosec: B101
    assert directed_rad_diam(cycle) == (3, 3), "rad and diam"  # nosec: B101
    broken = Orientation(g, [True, True, False, True])
    assert directed_rad_diam(broken) is None, "not strong"  # nosec: B101


def test_exhaustive_cycle():
    result = optimal_oriented_diameter(gen_cycle(4))
    assert result.best_diameter == 3, "directed C_4"  # nosec: B101
    assert result.strong_count == 2, "two rotations"  # nosec: B101
    assert result.best_orientation.bitmask() == 0, "smallest mask wins ties"  # nosec: B101
    assert result.enumerated == 16, "2^4"  # nosec: B101


def test_exhaustive_complete_graph():
    result = optimal_oriented_diameter(gen_complete(4), threads=2)
    assert result.best_diameter == 3, "no orientation of K_4 has diameter 2"  # nosec: B101
    assert result.strong_count == 24, "strong tournaments on 4 vertices"  # nosec: B101
    assert directed_rad_diam(result.best_orientation)[1] == 3, "witness"  # nosec: B101
    assert result.to_dict()["best_diameter"] == 3, "serializable"  # nosec: B101


def test_exhaustive_triangle_tree():
    result = optimal_oriented_diameter(gen_triangle_tree(2), max_edges=18)
    assert result.best_diameter == 8 and result.best_radius == 4, "cactus"  # nosec: B101
    assert result.strong_count == 64, "each triangle a directed cycle"  # nosec: B101


def test_exhaustive_limits():
    with pytest.raises(TooLargeError, match="use bounds instead"):
        optimal_oriented_diameter(gen_complete(6), max_edges=10)
    with pytest.raises(NotConnectedError):
        optimal_oriented_diameter(Graph(4, [(0, 1), (2, 3)]))
    none = optimal_oriented_diameter(gen_path(3))
    assert none.best_diameter is None and none.to_dict()["best_orientation"] is None  # nosec: B101


@pytest.mark.parametrize(
    "walk, path",
    [([0, 1, 2, 1, 3], [0, 1, 3]), ([0, 1, 2, 0, 4], [0, 4]), ([5], [5])],
)
def test_loop_erase(walk, path):
    assert loop_erase(walk) == path, "detours removed"  # nosec: B101


def test_rainbow_check():
    g = gen_cycle(4)
    good = EdgeColoring(g, [0, 1, 0, 1])
    check = is_rainbow_connected(good, witnesses=True)
    assert check.ok and check.witnesses["0-2"] in ([0, 1, 2], [0, 3, 2]), "paths"  # nosec: B101
    bad = EdgeColoring(g, [0, 0, 1, 1])
    verdict = is_rainbow_connected(bad)
    assert not verdict.ok and verdict.failing_pair == (0, 2), "0-1-2 and 0-3-2"  # nosec: B101
    with pytest.raises(TooLargeError, match="use certificates"):
        is_rainbow_connected(EdgeColoring(g, [0, 1, 2, 3]), max_colors=3)


@pytest.mark.parametrize(
    "graph, expected",
    [(gen_cycle(4), 2), (gen_cycle(6), 3), (gen_complete(4), 1), (Graph(1, []), 0)],
)
def test_exact_rc(graph, expected):
    assert exact_rc(graph) == expected, f"rc of {graph!r}"  # nosec: B101


def test_exact_rc_of_triangle_hub():
    graph = gen_extremal_rc(1, 3, copies=3)
    assert exact_rc(graph, max_edges=9) == 3, "two colors are not enough"  # nosec: B101
    with pytest.raises(TooLargeError):
        exact_rc(graph, max_edges=8)


def test_exact_rc_of_four_triangles_on_a_hub():
    graph = gen_extremal_rc(1, 3, copies=4)
    assert graph.m == 12, "four triangles"  # nosec: B101
    assert exact_rc(graph, max_edges=12) == 3, "matches the color bound"  # nosec: B101


def test_threaded_sweeps_agree():
    g = gen_petersen()
    orientation = orient(g)[0]
    expected = directed_rad_diam(orientation)
    assert expected is not None, "strong"  # nosec: B101
    assert directed_rad_diam(orientation, threads=2) == expected, "same values"  # nosec: B101
    coloring = EdgeColoring.canonical(g, [e % 4 for e in range(g.m)])
    serial = is_rainbow_connected(coloring, witnesses=True)
    threaded = is_rainbow_connected(coloring, witnesses=True, threads=3)
    assert serial == threaded, "same verdict and witnesses"  # nosec: B101
    assert is_rainbow_connected(  # nosec: B101
        EdgeColoring(gen_cycle(4), [0, 0, 1, 1]), threads=2
    ).failing_pair == (0, 2), "first failure in source order"
