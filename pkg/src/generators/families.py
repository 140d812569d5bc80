"""Parameterised example families and seeded random bridgeless graphs.

Every generator checks the structure it promises before returning, and all
randomness comes from ``numpy.random.default_rng(seed)``.
"""

import logging
import math
from typing import Callable, Literal, Optional

import numpy as np
from pydantic import BaseModel

from src.cycles.structure import eta
from src.errors import ConsistencyError
from src.generators.named import gen_complete_bipartite
from src.graphs.core import Graph
from src.metrics.bridges import bridges
from src.metrics.distances import bfs, radius_diameter_centers

Family = Literal[
    "triangle_tree",
    "extremal_rc",
    "wheel_example",
    "random_bridgeless",
    "bipartite_dense",
    "disconnected_counterexample",
]

MAX_TRIANGLE_TREE_DEPTH = 8


def _assert_structure(graph: Graph, family: str, **expected: int) -> None:
    """Compare measured parameters with the promised ones.

    Keys: ``rad``, ``eta``, ``ecc`` (of vertex 0), ``bridgeless`` (1/0).
    """
    measured: dict[str, int] = {}
    for key in expected:
        if key == "rad":
            measured[key] = radius_diameter_centers(graph)[0]
        elif key == "eta":
            measured[key] = int(eta(graph))
        elif key == "ecc":
            measured[key] = int(max(bfs(graph, 0).dist))
        elif key == "bridgeless":
            measured[key] = int(not bridges(graph))
        else:
            raise ValueError(f"unknown structural key {key}")
    logging.debug("%s: %r promised %s, measured %s", family, graph, expected, measured)
    if measured != expected:
        raise ConsistencyError(f"{family}: promised {expected}, measured {measured}")


def gen_triangle_tree(depth: int, check: bool = True) -> Graph:
    """Two copies of the rooted triangle tree ``T_depth`` glued at their roots.

    ``T_1`` is a triangle; ``T_d`` is a triangle ``u0 u1 u2`` with the root of
    a ``T_{d-1}`` identified at ``u1`` and at ``u2``. The shared root is
    vertex 0, the radius is ``depth`` and every edge lies in a triangle.
    """
    if not 1 <= depth <= MAX_TRIANGLE_TREE_DEPTH:
        raise ValueError(f"depth must be in 1..{MAX_TRIANGLE_TREE_DEPTH}, got {depth}")
    edges: list[tuple[int, int]] = []
    counter = [1]

    def grow(d: int, root: int) -> None:
        a, b = counter[0], counter[0] + 1
        counter[0] += 2
        edges.extend([(root, a), (a, b), (b, root)])
        if d > 1:
            grow(d - 1, a)
            grow(d - 1, b)

    grow(depth, 0)
    grow(depth, 0)
    graph = Graph(counter[0], edges)
    if check:
        _assert_structure(graph, "triangle_tree", rad=depth, eta=3, ecc=depth)
    return graph


def extremal_rc_colors(r: int, eta_value: int) -> int:
    """``m = sum_{i=1..r} min{2i+1, eta}``."""
    return sum(min(2 * i + 1, eta_value) for i in range(1, r + 1))


def gen_extremal_rc(r: int, eta_value: int, copies: Optional[int] = None) -> Graph:
    """``copies`` copies of the gadget ``H_{r, eta}`` sharing the hub 0.

    The gadget is a chain ``x_0 = hub, x_1, ..., x_r``; consecutive chain
    vertices are joined by an edge and by a parallel path. The parallel
    path at distance ``i`` from the far end has length ``min{2i, eta-1}``,
    so the hub sits next to the longest one and has eccentricity ``r``.
    ``copies`` defaults to ``m^r + 1``.
    """
    if r < 1:
        raise ValueError(f"r must be at least 1, got {r}")
    if not 3 <= eta_value <= 2 * r + 1:
        raise ValueError(f"eta must be in 3..{2 * r + 1}, got {eta_value}")
    if copies is None:
        copies = extremal_rc_colors(r, eta_value) ** r + 1
    if copies < 1:
        raise ValueError(f"copies must be positive, got {copies}")

    edges: list[tuple[int, int]] = []
    n = 1
    for _ in range(copies):
        previous = 0
        for step in range(1, r + 1):
            x = n
            n += 1
            edges.append((previous, x))
            length = min(2 * (r - step + 1), eta_value - 1)
            inner = list(range(n, n + length - 1))
            n += length - 1
            chain = [previous] + inner + [x]
            edges.extend(zip(chain, chain[1:]))
            previous = x
    graph = Graph(n, edges)
    _assert_structure(graph, "extremal_rc", ecc=r, eta=eta_value, bridgeless=1)
    return graph


def gen_wheel_example(r: int, k: int) -> Graph:
    """Wheel ``W_k`` with spokes subdivided into paths of length ``r``, then an
    apex vertex on every edge.

    Hub 0, rim ``1..k``. Every edge lies on a triangle through its apex.
    """
    if r < 3:
        raise ValueError(f"r must be at least 3, got {r}")
    if k < 2 * r:
        raise ValueError(f"k must be at least 2r = {2 * r}, got {k}")
    base: list[tuple[int, int]] = [(i, i % k + 1) for i in range(1, k + 1)]
    n = k + 1
    for i in range(1, k + 1):
        spoke = [0] + list(range(n, n + r - 1)) + [i]
        n += r - 1
        base.extend(zip(spoke, spoke[1:]))
    edges = list(base)
    for x, y in base:
        edges.extend([(x, n), (n, y)])
        n += 1
    graph = Graph(n, edges)
    _assert_structure(graph, "wheel_example", eta=3, bridgeless=1)
    return graph


def gen_random_bridgeless(n: int, extra_ears: int = 0, seed: int = 0) -> Graph:
    """Random bridgeless graph grown by ears.

    A random cycle comes first; ears of length 1..5 between existing
    vertices are attached until all ``n`` vertices are in, then
    ``extra_ears`` chords are added. Vertex ids are shuffled at the end.
    """
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    if extra_ears < 0:
        raise ValueError(f"extra_ears must be nonnegative, got {extra_ears}")
    rng = np.random.default_rng(seed)
    start = int(rng.integers(3, min(n, 8) + 1))
    edges = {(i, (i + 1) % start) for i in range(start)}
    order = [(i, (i + 1) % start) for i in range(start)]
    size = start

    def adjacent(a: int, b: int) -> bool:
        return (a, b) in edges or (b, a) in edges

    def add(a: int, b: int) -> None:
        edges.add((a, b))
        order.append((a, b))

    while size < n:
        a, b = (int(v) for v in rng.choice(size, 2, replace=False))
        length = min(int(rng.integers(1, 6)), n - size + 1)
        if length == 1:
            if not adjacent(a, b):
                add(a, b)
            continue
        chain = [a] + list(range(size, size + length - 1)) + [b]
        size += length - 1
        for x, y in zip(chain, chain[1:]):
            add(x, y)

    for _ in range(extra_ears):
        free = [(a, b) for a in range(n) for b in range(a + 1, n) if not adjacent(a, b)]
        if not free:
            break
        add(*free[int(rng.integers(len(free)))])

    label = [int(v) for v in rng.permutation(n)]
    graph = Graph(n, [(label[a], label[b]) for a, b in order])
    _assert_structure(graph, "random_bridgeless", bridgeless=1)
    return graph


def gen_bipartite_dense(n: int, m: int, seed: int = 0) -> Graph:
    """Random bipartite graph on ``0..n-1`` and ``n..n+m-1``.

    Every left degree exceeds ``ceil(m/2)`` and every right degree exceeds
    ``ceil(n/2)``: a greedy fill, a repair pass for the right side, then a
    few random extra edges.
    """
    if n < 2 or m < 2:
        raise ValueError(f"both parts need at least 2 vertices, got {n} and {m}")
    rng = np.random.default_rng(seed)
    need_left = math.ceil(m / 2) + 1
    need_right = math.ceil(n / 2) + 1
    adjacent = np.zeros((n, m), dtype=bool)
    for x in range(n):
        adjacent[x, rng.choice(m, need_left, replace=False)] = True
    for y in range(m):
        missing = need_right - int(adjacent[:, y].sum())
        if missing > 0:
            candidates = np.flatnonzero(~adjacent[:, y])
            adjacent[rng.choice(candidates, missing, replace=False), y] = True
    extra = int(rng.integers(0, n * m // 4 + 1))
    for x, y in zip(rng.integers(0, n, extra), rng.integers(0, m, extra)):
        adjacent[x, y] = True
    edges = [(int(x), n + int(y)) for x, y in zip(*np.nonzero(adjacent))]
    graph = Graph(n + m, edges)
    logging.debug("bipartite_dense(%d, %d, seed=%d): %r", n, m, seed, graph)
    return graph


def gen_disconnected_counterexample(n: int, m: int) -> Graph:
    """Two disjoint copies of ``K_{n/2, m/2}``."""
    if n < 2 or m < 2 or n % 2 or m % 2:
        raise ValueError(f"n and m must be even and at least 2, got {n} and {m}")
    a, b = n // 2, m // 2
    return Graph(n + m, gen_complete_bipartite(a, b) + gen_complete_bipartite(a, b, a + b))


class FamilySpec(BaseModel):
    """A family name, its integer parameters and the seed."""

    family: Family
    params: dict[str, int] = {}
    seed: int = 0


_BUILDERS: dict[str, tuple[Callable[..., Graph], set[str], set[str]]] = {
    "triangle_tree": (lambda p, s: gen_triangle_tree(p["depth"]), {"depth"}, set()),
    "extremal_rc": (
        lambda p, s: gen_extremal_rc(p["r"], p["eta"], p.get("copies")),
        {"r", "eta"},
        {"copies"},
    ),
    "wheel_example": (lambda p, s: gen_wheel_example(p["r"], p["k"]), {"r", "k"}, set()),
    "random_bridgeless": (
        lambda p, s: gen_random_bridgeless(p["n"], p.get("extra_ears", 0), s),
        {"n"},
        {"extra_ears"},
    ),
    "bipartite_dense": (lambda p, s: gen_bipartite_dense(p["n"], p["m"], s), {"n", "m"}, set()),
    "disconnected_counterexample": (
        lambda p, s: gen_disconnected_counterexample(p["n"], p["m"]),
        {"n", "m"},
        set(),
    ),
}


def gen_family(spec: FamilySpec) -> Graph:
    """Build the graph a :class:`FamilySpec` describes.

    Raises:
        ValueError: on missing or unknown parameters, or out-of-range values.
    """
    build, required, optional = _BUILDERS[spec.family]
    given = set(spec.params)
    if required - given:
        raise ValueError(f"{spec.family} needs parameters {sorted(required - given)}")
    if given - required - optional:
        raise ValueError(f"{spec.family} does not take {sorted(given - required - optional)}")
    logging.info("Generating %s with %s (seed %d)", spec.family, spec.params, spec.seed)
    return build(spec.params, spec.seed)


def random_corpus(count: int, n_max: int = 60, m_max: int = 150, seed: int = 0) -> list[Graph]:
    """``count`` seeded random bridgeless graphs with ``n <= n_max``, ``m <= m_max``."""
    rng = np.random.default_rng(seed)
    corpus = []
    while len(corpus) < count:
        n = int(rng.integers(3, n_max + 1))
        extra = int(rng.integers(0, n // 2 + 1))
        graph = gen_random_bridgeless(n, extra, int(rng.integers(2**31)))
        if graph.m <= m_max:
            corpus.append(graph)
    return corpus


def bipartite_corpus(count: int, part_max: int = 12, seed: int = 0) -> list[Graph]:
    """``count`` seeded :func:`gen_bipartite_dense` graphs, parts of size ``2..part_max``."""
    rng = np.random.default_rng(seed)
    return [
        gen_bipartite_dense(
            int(rng.integers(2, part_max + 1)),
            int(rng.integers(2, part_max + 1)),
            int(rng.integers(2**31)),
        )
        for _ in range(count)
    ]


def min_degree_corpus(
    count: int, n_max: int = 24, p: float = 0.75, seed: int = 0, n_min: int = 5
) -> list[Graph]:
    """``count`` seeded G(n, p) graphs with ``n_min <= n <= n_max`` and ``delta > n/2``.

    Draws failing the degree condition are discarded.
    """
    if not 3 <= n_min <= n_max:
        raise ValueError(f"need 3 <= n_min <= n_max, got {n_min} and {n_max}")
    if not 0 < p <= 1:
        raise ValueError(f"p must lie in (0, 1], got {p}")
    rng = np.random.default_rng(seed)
    corpus = []
    while len(corpus) < count:
        n = int(rng.integers(n_min, n_max + 1))
        upper = np.triu(rng.random((n, n)) < p, k=1)
        graph = Graph(n, [(int(a), int(b)) for a, b in zip(*np.nonzero(upper))])
        if 2 * graph.min_degree() > n:
            corpus.append(graph)
    logging.debug("min_degree_corpus: %d graphs (seed %d)", count, seed)
    return corpus
