from typing import Sequence, Tuple

from homdensity.exceptions import ImageOutOfRange, MappingArityMismatch
from homdensity.graph import Graph

VertexMapping = Tuple[int, ...]


def validate_mapping(g: Graph, f: Graph, mapping: Sequence[int]) -> VertexMapping:
    if len(mapping) != g.n:
        raise MappingArityMismatch(len(mapping), g.n)

    for vertex, image in enumerate(mapping):
        if not 0 <= image < f.n:
            raise ImageOutOfRange(vertex, image, f.n)

    return tuple(mapping)


def preserves_edges(g: Graph, f: Graph, mapping: Sequence[int]) -> bool:
    # An edge collapsed onto one vertex fails here too, since f has no loops.
    adjacency = f.adjacency
    return all(mapping[v] in adjacency[mapping[u]] for u, v in g.edges)


def is_homomorphism(g: Graph, f: Graph, mapping: Sequence[int]) -> bool:
    """
    Tests whether `mapping` sends every edge of `g` onto an edge of `f`.

    :param g: The domain graph.
    :param f: The codomain graph.
    :param mapping: A sequence whose entry `i` is the image of domain vertex `i`.
    :raises MappingArityMismatch: When the mapping does not cover exactly the vertices of `g`.
    :raises ImageOutOfRange: When an image is not a vertex of `f`.
    """
    return preserves_edges(g, f, validate_mapping(g, f, mapping))


def is_injective(mapping: Sequence[int]) -> bool:
    return len(set(mapping)) == len(mapping)
