from homdensity.graph import Graph


def count_ordered_cliques(f: Graph, n: int) -> int:
    """
    Counts ordered n-cliques of `f`: injective n-tuples of pairwise adjacent vertices.

    A homomorphism out of the complete graph K_n must be injective, because two vertices with the same image would
    collapse an edge. So this is exactly the number of homomorphisms from K_n into `f`.
    """

    def extend(candidates, remaining):
        if 0 == remaining:
            return 1
        if len(candidates) < remaining:
            return 0
        return sum(extend(candidates & f.adjacency[vertex], remaining - 1) for vertex in candidates)

    return extend(frozenset(f.vertices), n)
