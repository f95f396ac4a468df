import math

from homdensity.graph import Graph


def count_mappings(g: Graph, f: Graph) -> int:
    # 0 ** 0 == 1: the empty mapping.
    return f.n ** g.n


def count_injective(g: Graph, f: Graph) -> int:
    return math.perm(f.n, g.n)
