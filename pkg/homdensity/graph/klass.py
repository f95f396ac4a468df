from typing import FrozenSet, Iterable, List, NamedTuple, Tuple

from homdensity.exceptions import (
    DuplicateEdge,
    InvalidOrder,
    SelfLoop,
    VertexOutOfRange,
)

Edge = Tuple[int, int]


class DegreeInfo(NamedTuple):
    vertex: int
    degree: int


class Graph:
    """
    A finite simple undirected graph on the vertices ``0..n-1``.

    Instances are immutable values: two graphs are equal when they have the same vertex count and the same edge set.
    The constructor validates its input, so every `Graph` in circulation has no self-loops, no repeated edges and
    only in-range endpoints.

    :param n:
        The number of vertices.
    :param edge_pairs:
        An iterable of ``(u, v)`` pairs. Orientation does not matter but each unordered pair may appear only once.
    """

    __slots__ = ("n", "edges", "adjacency")

    def __init__(self, n: int, edge_pairs: Iterable[Edge] = ()):
        if n < 0:
            raise InvalidOrder("Graph", n, 0)

        edges = set()
        adjacency = [set() for _ in range(n)]
        for u, v in edge_pairs:
            for vertex in (u, v):
                if not 0 <= vertex < n:
                    raise VertexOutOfRange(vertex, n)
            if u == v:
                raise SelfLoop(u)

            edge = (u, v) if u < v else (v, u)
            if edge in edges:
                raise DuplicateEdge(u, v)

            edges.add(edge)
            adjacency[u].add(v)
            adjacency[v].add(u)

        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(edges))
        object.__setattr__(self, "adjacency", tuple(frozenset(neighbors) for neighbors in adjacency))

    def __setattr__(self, key, value):
        raise AttributeError("Graph is immutable.")

    def __reduce__(self):
        return self.__class__, (self.n, self.sorted_edges())

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adjacency[u]

    def neighbors(self, vertex: int) -> FrozenSet[int]:
        if not 0 <= vertex < self.n:
            raise VertexOutOfRange(vertex, self.n)
        return self.adjacency[vertex]

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return "Graph(n={}, edges={})".format(self.n, self.sorted_edges())


def new_graph(n: int, edge_pairs: Iterable[Edge]) -> Graph:
    return Graph(n, edge_pairs)
