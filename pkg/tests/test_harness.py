"""Tests for the per-graph theorem reports"""

import pytest

from src.errors import ConsistencyError
from src.generators.families import (
    bipartite_corpus,
    gen_bipartite_dense,
    gen_disconnected_counterexample,
    min_degree_corpus,
)
from src.generators.named import gen_complete, gen_cycle, gen_path, gen_petersen
from src.graphs.core import Graph
from src.harness.theorems import (
    Measurements,
    bipartite_dense_hypotheses,
    check_bipartite_theorem,
    check_construction_bounds,
    check_general_theorems,
    check_girth_corollary,
    evaluate_asserted_bounds,
    girth_corollary_k,
    reference_bounds,
    reports_to_table,
    run_corpus,
    run_report,
)

K33 = Graph(6, [(a, b) for a in range(3) for b in range(3, 6)])
OCTAHEDRON = Graph(6, [(a, b) for a in range(6) for b in range(a + 1, 6) if b != a + 3])


def test_reference_bounds():
    bounds = reference_bounds(gen_complete(4))
    assert bounds == {  # nosec: B101
        "ct_rad": 2,
        "ct_diam": 4,
        "thm2_rad": 2,
        "thm2_diam": 4,
        "thm4_colors": 3,
        "thm3_colors": 3,
    }, "K_4"


def test_construction_bounds_pass():
    entries = check_construction_bounds(gen_cycle(5))
    assert [e.status for e in entries] == ["pass"] * 6, "C_5"  # nosec: B101
    skipped = check_construction_bounds(gen_path(4))
    assert {e.status for e in skipped} == {"skipped"}, "a path has bridges"  # nosec: B101


def test_bipartite_theorem():
    assert bipartite_dense_hypotheses(K33), "degree 3 > 2"  # nosec: B101
    assert [e.status for e in check_bipartite_theorem(K33)] == ["pass"] * 4  # nosec: B101
    assert not bipartite_dense_hypotheses(gen_cycle(6)), "degree 2"  # nosec: B101


def test_general_theorems():
    entries = check_general_theorems(gen_complete(5))
    assert len(entries) == 7, "four for case i, three for case ii"  # nosec: B101
    statuses = [e.status for e in entries]
    assert statuses == ["skipped"] * 4 + ["pass"] * 3, "no vertex at distance 2"  # nosec: B101
    cycle = check_general_theorems(gen_cycle(5))
    assert [e.status for e in cycle[:4]] == ["pass"] * 4, "|N_2| = 2 > 3/2"  # nosec: B101
    with pytest.raises(ValueError):
        check_general_theorems(gen_complete(5), k=1)


def test_girth_corollary():
    petersen = gen_petersen()
    assert girth_corollary_k(petersen, strict=True) == 2, "3 * 2 > 4"  # nosec: B101
    entries = check_girth_corollary(petersen)
    assert [e.bound for e in entries] == [16, 20], "4k^2 and 4k^2 + 2k"  # nosec: B101
    assert all(e.status == "pass" for e in entries), "Petersen"  # nosec: B101
    assert girth_corollary_k(gen_path(3), strict=True) is None, "acyclic"  # nosec: B101


def test_asserted_bounds():
    entries = evaluate_asserted_bounds(OCTAHEDRON, face_len=3)
    plane = entries[:3]
    assert [e.bound for e in plane] == [4, 8, 6], "rad 2, faces of length 3"  # nosec: B101
    assert all(e.status == "pass" and e.hypotheses == "asserted" for e in plane)  # nosec: B101
    assert {e.status for e in entries[3:]} == {"skipped"}, "not asserted"  # nosec: B101


def test_report_on_disconnected_graph():
    report = run_report(gen_disconnected_counterexample(4, 4))
    assert not report.graph.connected and report.graph.rad is None, "summary"  # nosec: B101
    assert report.failures == [], "nothing is claimed"  # nosec: B101


def test_corpus_table():
    reports = run_corpus([gen_cycle(5), gen_complete(4)])
    table = reports_to_table(reports)
    assert list(table.columns) == [  # nosec: B101
        "graph",
        "n",
        "m",
        "theorem",
        "hypotheses",
        "bound",
        "measured",
        "status",
    ], "columns"
    assert len(table) == 2 * len(reports[0].theorems), "one row per entry"  # nosec: B101
    assert (table["status"] != "fail").all(), "no failures"  # nosec: B101


def test_cycle_reference_and_boundaries():
    bounds = reference_bounds(gen_cycle(4))
    assert (bounds["ct_rad"], bounds["thm2_rad"]) == (6, 5), "eta bound is tighter"  # nosec: B101
    square = Graph(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    assert [e.status for e in check_bipartite_theorem(square)] == ["pass"] * 4  # nosec: B101
    case_i = check_general_theorems(gen_cycle(4))[:4]
    assert {e.status for e in case_i} == {"skipped"}, "|N_2| = 1 is not > 1"  # nosec: B101


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_dense_bipartite_corpus(seed):
    graph = gen_bipartite_dense(6, 5, seed=seed)
    entries = check_bipartite_theorem(graph)
    assert all(e.hypotheses == "hold" for e in entries), "degree condition"  # nosec: B101
    assert all(e.status == "pass" for e in entries), f"{entries}"  # nosec: B101


def test_min_degree_case_on_octahedron():
    case_ii = check_general_theorems(OCTAHEDRON)[4:]
    assert [e.status for e in case_ii] == ["pass"] * 3, "degree 4 > 3"  # nosec: B101


def test_bipartite_corpus_at_full_size():
    for graph in bipartite_corpus(50, seed=0):
        entries = check_bipartite_theorem(graph)
        assert all(e.hypotheses == "hold" for e in entries), f"{graph!r}"  # nosec: B101
        assert all(e.status == "pass" for e in entries), f"{entries}"  # nosec: B101


def test_min_degree_corpus_at_full_size():
    for graph in min_degree_corpus(50, seed=0):
        case_ii = check_general_theorems(graph)[4:]
        assert all(e.hypotheses == "hold" for e in case_ii), f"{graph!r}"  # nosec: B101
        assert all(e.status == "pass" for e in case_ii), f"{case_ii}"  # nosec: B101


def test_dense_random_graphs_on_twelve_vertices():
    corpus = min_degree_corpus(10, n_max=12, p=0.7, seed=1, n_min=12)
    assert all(g.n == 12 and g.min_degree() > 6 for g in corpus), "G(12, 0.7)"  # nosec: B101
    for graph in corpus:
        assert [e.status for e in check_general_theorems(graph)[4:]] == [  # nosec: B101
            "pass"
        ] * 3, f"{graph!r}"


def test_weak_construction_is_a_consistency_error(monkeypatch):
    monkeypatch.setattr("src.harness.theorems.directed_rad_diam", lambda *args: None)
    with pytest.raises(ConsistencyError):
        Measurements(gen_cycle(5)).oriented
