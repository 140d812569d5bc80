"""Tests for the named graphs and the example families"""

import pytest
from pydantic import ValidationError

from src.cycles.structure import eta
from src.generators.families import (
    FamilySpec,
    bipartite_corpus,
    extremal_rc_colors,
    gen_bipartite_dense,
    gen_disconnected_counterexample,
    gen_extremal_rc,
    gen_family,
    gen_random_bridgeless,
    gen_triangle_tree,
    gen_wheel_example,
    min_degree_corpus,
    random_corpus,
)
from src.generators.named import gen_complete_bipartite, gen_petersen, gen_theta, gen_wheel
from src.metrics.bridges import is_bridgeless
from src.metrics.distances import bipartition, radius_diameter_centers


def test_named_graphs():
    assert (gen_petersen().n, gen_petersen().m) == (10, 15), "Petersen"  # nosec: B101
    wheel = gen_wheel(5)
    assert (wheel.n, wheel.m, wheel.degree(0)) == (6, 10, 5), "W_5"  # nosec: B101
    assert len(gen_complete_bipartite(2, 3)) == 6, "K_{2,3}"  # nosec: B101
    with pytest.raises(ValueError):
        gen_theta([1, 1, 2])


@pytest.mark.parametrize("depth, n, m", [(1, 5, 6), (2, 13, 18), (3, 29, 42)])
def test_triangle_tree(depth, n, m):
    graph = gen_triangle_tree(depth)
    assert (graph.n, graph.m) == (n, m), "two glued copies"  # nosec: B101
    assert radius_diameter_centers(graph)[0] == depth, "radius"  # nosec: B101


def test_triangle_tree_depth_range():
    for depth in (0, 9):
        with pytest.raises(ValueError):
            gen_triangle_tree(depth)


def test_extremal_rc():
    assert extremal_rc_colors(2, 5) == 8, "3 + 5"  # nosec: B101
    graph = gen_extremal_rc(2, 5, copies=2)
    assert (graph.n, graph.m) == (13, 16), "two gadgets"  # nosec: B101
    assert gen_extremal_rc(1, 3).n == 9, "m^r + 1 = 4 triangles by default"  # nosec: B101
    with pytest.raises(ValueError):
        gen_extremal_rc(1, 4)


def test_wheel_example():
    graph = gen_wheel_example(3, 6)
    assert (graph.n, graph.m) == (43, 72), "subdivided wheel with apexes"  # nosec: B101
    assert eta(graph) == 3 and is_bridgeless(graph), "triangles everywhere"  # nosec: B101
    rad, diam, _ = radius_diameter_centers(graph)
    assert rad == 4, "apexes push the radius to r+1"  # nosec: B101
    assert diam == 5, "rim-edge apex to a far hub-edge apex"  # nosec: B101
    with pytest.raises(ValueError):
        gen_wheel_example(3, 5)


def test_random_bridgeless_is_seeded():
    first = gen_random_bridgeless(20, 3, seed=5)
    assert first == gen_random_bridgeless(20, 3, seed=5), "same seed"  # nosec: B101
    assert first.n == 20 and first.is_connected(), "spans n vertices"  # nosec: B101
    assert is_bridgeless(first), "bridgeless"  # nosec: B101


def test_bipartite_dense_degrees():
    graph = gen_bipartite_dense(5, 4, seed=1)
    parts = bipartition(graph)
    assert parts.bipartite, "bipartite"  # nosec: B101
    assert all(graph.degree(v) > 2 for v in range(5)), "left side"  # nosec: B101
    assert all(graph.degree(v) > 3 for v in range(5, 9)), "right side"  # nosec: B101


def test_disconnected_counterexample():
    graph = gen_disconnected_counterexample(4, 6)
    assert len(graph.components()) == 2 and graph.m == 12, "two K_{2,3}"  # nosec: B101
    with pytest.raises(ValueError):
        gen_disconnected_counterexample(3, 4)


def test_gen_family():
    graph = gen_family(FamilySpec(family="triangle_tree", params={"depth": 1}))
    assert graph.n == 5, "dispatch"  # nosec: B101
    with pytest.raises(ValueError, match="needs parameters"):
        gen_family(FamilySpec(family="extremal_rc", params={"r": 2}))
    with pytest.raises(ValueError, match="does not take"):
        gen_family(FamilySpec(family="triangle_tree", params={"depth": 1, "k": 3}))
    with pytest.raises(ValidationError):
        FamilySpec(family="hypercube")


def test_random_corpus():
    corpus = random_corpus(4, n_max=12, m_max=30, seed=2)
    assert len(corpus) == 4, "count"  # nosec: B101
    assert all(g.n <= 12 and g.m <= 30 and is_bridgeless(g) for g in corpus)  # nosec: B101


def test_bipartite_corpus():
    corpus = bipartite_corpus(5, part_max=6, seed=4)
    assert len(corpus) == 5, "count"  # nosec: B101
    assert all(bipartition(g).bipartite and g.n <= 12 for g in corpus), "bipartite"  # nosec: B101


def test_min_degree_corpus():
    corpus = min_degree_corpus(5, n_max=10, seed=4)
    assert all(5 <= g.n <= 10 and 2 * g.min_degree() > g.n for g in corpus)  # nosec: B101
    assert min_degree_corpus(3, seed=4) == min_degree_corpus(3, seed=4), "seeded"  # nosec: B101
    with pytest.raises(ValueError):
        min_degree_corpus(1, n_max=4, n_min=5)
    with pytest.raises(ValueError):
        min_degree_corpus(1, p=0.0)
