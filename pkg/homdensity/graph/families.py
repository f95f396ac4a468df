from homdensity.exceptions import InvalidOrder
from homdensity.utils import pairs
from .klass import Graph


def complete(n: int) -> Graph:
    return Graph(n, pairs(n))


def edgeless(n: int) -> Graph:
    return Graph(n)


def path(n: int) -> Graph:
    # Named by vertex count: path(4) has three edges.
    if n < 1:
        raise InvalidOrder("Path", n, 1)
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidOrder("Cycle", n, 3)
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


FAMILIES = {
    "K": complete,
    "P": path,
    "C": cycle,
    "E": edgeless,
}
