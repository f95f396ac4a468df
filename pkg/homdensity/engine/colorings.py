from homdensity.graph import Graph
from .backtracking import search_plan


def count_proper_colorings(g: Graph, m: int) -> int:
    """
    Counts the colorings of `g` with `m` colors in which adjacent vertices differ.

    Any two distinct vertices of K_m are adjacent, so these colorings are exactly the homomorphisms from `g` into
    K_m.

    :param g: The graph to color.
    :param m: The number of colors.
    """
    if 0 == g.n:
        return 1

    order, back_neighbors = search_plan(g)
    colors = [None] * g.n
    last = g.n - 1

    def extend(depth):
        used = {colors[position] for position in back_neighbors[depth]}
        if depth == last:
            return m - len(used)

        total = 0
        for color in range(m):
            if color in used:
                continue
            colors[depth] = color
            total += extend(depth + 1)
        return total

    return extend(0)
