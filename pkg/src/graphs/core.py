"""Immutable value types: simple undirected graphs, orientations, colorings.

Algorithms refer to edges only by their id, the index in ``Graph.edges``.
"""

from typing import Iterable, Iterator, Optional, Sequence

import networkx as nx

Edge = tuple[int, int]


class Graph:
    """Simple undirected graph on vertices ``0..n-1`` with stable edge ids.

    Args:
        n: vertex count.
        edges: vertex pairs, indexed by edge id.

    Raises:
        ValueError: on self-loops, duplicate edges or out-of-range vertices.
    """

    __slots__ = ("n", "edges", "adjacency", "_index")

    def __init__(self, n: int, edges: Iterable[Sequence[int]]) -> None:
        if n < 0:
            raise ValueError(f"negative vertex count {n}")
        pairs: list[Edge] = []
        index: dict[Edge, int] = {}
        adjacency: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for e, (u, v) in enumerate(edges):
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {e} = ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u} (edge {e})")
            key = (min(u, v), max(u, v))
            if key in index:
                raise ValueError(f"duplicate edge {key} (edges {index[key]} and {e})")
            index[key] = e
            pairs.append((u, v))
            adjacency[u].append((v, e))
            adjacency[v].append((u, e))
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(pairs)
        self.adjacency: tuple[tuple[tuple[int, int], ...], ...] = tuple(
            tuple(sorted(nbrs)) for nbrs in adjacency
        )
        self._index = index

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[int]], n: Optional[int] = None) -> "Graph":
        """Build a graph, inferring ``n`` as one more than the largest id."""
        pairs = [(int(u), int(v)) for u, v in edges]
        inferred = 1 + max((max(p) for p in pairs), default=-1)
        return cls(inferred if n is None else n, pairs)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        """Relabel a networkx graph's nodes to ``0..n-1`` in sorted order."""
        nodes = sorted(graph.nodes())
        label = {node: i for i, node in enumerate(nodes)}
        pairs = sorted(
            (min(label[a], label[b]), max(label[a], label[b])) for a, b in graph.edges()
        )
        return cls(len(nodes), pairs)

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_id(self, u: int, v: int) -> Optional[int]:
        """Edge id of ``{u, v}``, or None when absent."""
        return self._index.get((min(u, v), max(u, v)))

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._index

    def neighbors(self, v: int) -> Iterator[int]:
        return (w for w, _ in self.adjacency[v])

    def other(self, e: int, v: int) -> int:
        """Endpoint of edge ``e`` that is not ``v``."""
        a, b = self.edges[e]
        if v == a:
            return b
        if v == b:
            return a
        raise ValueError(f"vertex {v} is not an endpoint of edge {e}")

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def min_degree(self) -> int:
        return min((len(nbrs) for nbrs in self.adjacency), default=0)

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.n
        result = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w, _ in self.adjacency[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            result.append(sorted(comp))
        return result

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def remove_edge(self, e: int) -> "Graph":
        """Copy without edge ``e``; later edge ids shift down by one."""
        return Graph(self.n, [p for i, p in enumerate(self.edges) if i != e])

    def subgraph_by_edges(self, edge_ids: Iterable[int]) -> "Graph":
        """Spanning subgraph keeping the given edges, in ascending id order."""
        return Graph(self.n, [self.edges[e] for e in sorted(set(edge_ids))])

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class Orientation:
    """A direction for every edge of a graph.

    ``forward[e]`` is True when edge ``(u, v) = graph.edges[e]`` becomes the
    arc ``u -> v``.
    """

    __slots__ = ("graph", "forward")

    def __init__(self, graph: Graph, forward: Sequence[bool]) -> None:
        if len(forward) != graph.m:
            raise ValueError(f"orientation covers {len(forward)} of {graph.m} edges")
        self.graph = graph
        self.forward: tuple[bool, ...] = tuple(bool(f) for f in forward)

    @classmethod
    def from_arcs(cls, graph: Graph, arcs: Iterable[Edge]) -> "Orientation":
        """Orientation from one arc per edge, given in any order."""
        forward: list[Optional[bool]] = [None] * graph.m
        for a, b in arcs:
            e = graph.edge_id(a, b)
            if e is None:
                raise ValueError(f"arc {a}->{b} is not an edge of the graph")
            if forward[e] is not None:
                raise ValueError(f"edge {graph.edges[e]} oriented twice")
            forward[e] = graph.edges[e][0] == a
        missing = [e for e, f in enumerate(forward) if f is None]
        if missing:
            raise ValueError(f"edges without direction: {missing}")
        return cls(graph, [bool(f) for f in forward])

    @classmethod
    def from_bitmask(cls, graph: Graph, mask: int) -> "Orientation":
        """Bit ``e`` set means edge ``e`` is oriented forward."""
        return cls(graph, [(mask >> e) & 1 == 1 for e in range(graph.m)])

    def tail(self, e: int) -> int:
        u, v = self.graph.edges[e]
        return u if self.forward[e] else v

    def head(self, e: int) -> int:
        u, v = self.graph.edges[e]
        return v if self.forward[e] else u

    def arcs(self) -> list[Edge]:
        """Arcs in edge-id order."""
        return [(self.tail(e), self.head(e)) for e in range(self.graph.m)]

    def out_adjacency(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.graph.n)]
        for a, b in self.arcs():
            out[a].append(b)
        return [sorted(nbrs) for nbrs in out]

    def in_adjacency(self) -> list[list[int]]:
        into: list[list[int]] = [[] for _ in range(self.graph.n)]
        for a, b in self.arcs():
            into[b].append(a)
        return [sorted(nbrs) for nbrs in into]

    def bitmask(self) -> int:
        return sum(1 << e for e, f in enumerate(self.forward) if f)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Orientation):
            return NotImplemented
        return self.graph == other.graph and self.forward == other.forward

    def __repr__(self) -> str:
        return f"Orientation({self.graph!r}, arcs={self.arcs()})"


class EdgeColoring:
    """A color id per edge; the ids in use are exactly ``0..color_count-1``."""

    __slots__ = ("graph", "colors", "color_count")

    def __init__(self, graph: Graph, colors: Sequence[int]) -> None:
        if len(colors) != graph.m:
            raise ValueError(f"coloring covers {len(colors)} of {graph.m} edges")
        used = set(colors)
        if used and (min(used) < 0 or used != set(range(max(used) + 1))):
            raise ValueError(f"color ids must form a range 0..k-1, got {sorted(used)}")
        self.graph = graph
        self.colors: tuple[int, ...] = tuple(int(c) for c in colors)
        self.color_count = len(used)

    @classmethod
    def canonical(cls, graph: Graph, raw_colors: Sequence[int]) -> "EdgeColoring":
        """Compact arbitrary nonnegative ids onto ``0..k-1``, keeping their order."""
        relabel = {raw: i for i, raw in enumerate(sorted(set(raw_colors)))}
        return cls(graph, [relabel[c] for c in raw_colors])

    def color_of(self, u: int, v: int) -> int:
        e = self.graph.edge_id(u, v)
        if e is None:
            raise ValueError(f"{u}-{v} is not an edge")
        return self.colors[e]

    def path_colors(self, path: Sequence[int]) -> list[int]:
        return [self.color_of(a, b) for a, b in zip(path, path[1:])]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return self.graph == other.graph and self.colors == other.colors

    def __repr__(self) -> str:
        return f"EdgeColoring({self.graph!r}, colors={self.color_count})"
