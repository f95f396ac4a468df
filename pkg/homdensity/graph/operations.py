from typing import List, Tuple

from homdensity.utils import pairs
from .klass import DegreeInfo, Graph


def complement(g: Graph) -> Graph:
    return Graph(g.n, [pair for pair in pairs(g.n) if pair not in g.edges])


def degree(g: Graph, vertex: int) -> int:
    return len(g.neighbors(vertex))


def degrees(g: Graph) -> List[DegreeInfo]:
    return [DegreeInfo(vertex, len(g.adjacency[vertex])) for vertex in g.vertices]


def isolated_vertices(g: Graph) -> List[int]:
    return [vertex for vertex in g.vertices if not g.adjacency[vertex]]


def is_edgeless(g: Graph) -> bool:
    return 0 == g.edge_count


def is_complete(g: Graph) -> bool:
    return g.edge_count == g.n * (g.n - 1) // 2


def strip_isolated(g: Graph) -> Tuple[Graph, int]:
    """
    Removes every isolated vertex from `g`.

    The remaining vertices are relabeled to ``0..n-k-1`` keeping their relative order, so the result is deterministic
    and the edge set is carried over under that compaction.

    :param g:
        The graph to reduce.
    :return:
        A tuple of the reduced graph and the number `k` of vertices that were removed.
    """
    kept = [vertex for vertex in g.vertices if g.adjacency[vertex]]
    if len(kept) == g.n:
        return g, 0

    relabel = {vertex: label for label, vertex in enumerate(kept)}
    stripped = Graph(len(kept), [(relabel[u], relabel[v]) for u, v in g.sorted_edges()])
    return stripped, g.n - len(kept)


def add_isolated(g: Graph, k: int = 1) -> Graph:
    return Graph(g.n + k, g.edges)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    return Graph(g.n, list(g.edges) + [(u, v)])
