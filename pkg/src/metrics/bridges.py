"""Cut-edge detection by DFS low-links."""

from src.graphs.core import Graph


def bridges(graph: Graph) -> set[int]:
    """Edge ids whose removal disconnects their component.

    Iterative Tarjan low-link DFS; the parent edge is skipped by id, so a
    vertex pair is never mistaken for a 2-cycle.

    Args:
        graph: the graph.

    Returns:
        set[int]: bridge edge ids, empty iff every component is bridgeless.
    """
    order = [-1] * graph.n
    low = [0] * graph.n
    found: set[int] = set()
    counter = 0
    for root in range(graph.n):
        if order[root] != -1:
            continue
        order[root] = low[root] = counter
        counter += 1
        # (vertex, edge used to enter it, next adjacency index)
        stack = [(root, -1, 0)]
        while stack:
            v, via, i = stack[-1]
            if i < len(graph.adjacency[v]):
                stack[-1] = (v, via, i + 1)
                w, e = graph.adjacency[v][i]
                if e == via:
                    continue
                if order[w] == -1:
                    order[w] = low[w] = counter
                    counter += 1
                    stack.append((w, e, 0))
                else:
                    low[v] = min(low[v], order[w])
                continue
            stack.pop()
            if stack:
                parent = stack[-1][0]
                low[parent] = min(low[parent], low[v])
                if low[v] > order[parent]:
                    found.add(via)
    return found


def is_bridgeless(graph: Graph) -> bool:
    return not bridges(graph)
