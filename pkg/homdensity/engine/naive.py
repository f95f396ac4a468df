import itertools
from typing import Iterator, Optional

from homdensity.graph import Graph
from .counter import HomomorphismCounter
from .counts import count_mappings
from .mapping import VertexMapping, preserves_edges
from .stats import PartitionResult


def iter_mappings(g: Graph, f: Graph) -> Iterator[VertexMapping]:
    return itertools.product(range(f.n), repeat=g.n)


def iter_injective_mappings(g: Graph, f: Graph) -> Iterator[VertexMapping]:
    return itertools.permutations(range(f.n), g.n)


def iter_homomorphisms_naive(g: Graph, f: Graph, counter: Optional[HomomorphismCounter] = None):
    counter = counter or HomomorphismCounter()
    counter.check_budget(count_mappings(g, f))

    for mapping in iter_mappings(g, f):
        if preserves_edges(g, f, mapping):
            yield mapping


class NaivePartition:
    """
    Every mapping that sends domain vertex 0 to `first_image`.
    """

    def __init__(self, g: Graph, f: Graph, first_image: int):
        self.g = g
        self.f = f
        self.first_image = first_image

    def run(self) -> PartitionResult:
        count = examined = 0
        for rest in itertools.product(range(self.f.n), repeat=self.g.n - 1):
            examined += 1
            if preserves_edges(self.g, self.f, (self.first_image,) + rest):
                count += 1

        return PartitionResult(count, examined, 0)

    def __str__(self):
        return 'naive(vertex 0 -> {})'.format(self.first_image)


def count_homomorphisms_naive(g: Graph, f: Graph, counter: Optional[HomomorphismCounter] = None) -> int:
    """
    Counts homomorphisms by testing every one of the |V(f)|^|V(g)| mappings.

    This is the reference oracle for every other counting path, so it stays deliberately simple. It refuses inputs
    whose mapping count exceeds the counter's budget.

    :raises BudgetExceeded: When the enumeration would be larger than ``counter.budget``.
    """
    counter = counter or HomomorphismCounter()
    counter.check_budget(count_mappings(g, f))

    if 0 == g.n:
        return 1

    partitions = [NaivePartition(g, f, image) for image in range(f.n)]
    return sum(result.count for result in counter.count_partitions(*partitions))
