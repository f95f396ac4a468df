import logging
import time
from typing import List, Optional, Tuple

from homdensity.graph import Graph
from .counter import HomomorphismCounter
from .stats import FastPath, PartitionResult, SearchStats

logger = logging.getLogger(__name__)


def search_order(g: Graph) -> List[int]:
    """Descending degree, ties broken by the smaller label."""
    return sorted(g.vertices, key=lambda vertex: (-len(g.adjacency[vertex]), vertex))


def search_plan(g: Graph) -> Tuple[List[int], List[Tuple[int, ...]]]:
    """
    Orders the domain for a backtracking search.

    :return:
        The vertex order, and for each position the positions of the earlier vertices adjacent to it. Those are the
        constraints checked when a candidate image is tried at that position.
    """
    order = search_order(g)
    position = {vertex: index for index, vertex in enumerate(order)}
    back_neighbors = [
        tuple(sorted(position[neighbor] for neighbor in g.adjacency[vertex] if position[neighbor] < index))
        for index, vertex in enumerate(order)
    ]
    return order, back_neighbors


class BacktrackingPartition:
    """
    The part of the search tree in which the first vertex of the order takes `first_image`.
    """

    def __init__(self, order, back_neighbors, f: Graph, first_image: int):
        self.order = order
        self.back_neighbors = back_neighbors
        self.f = f
        self.first_image = first_image
        self._images = None
        self._nodes_expanded = 0
        self._prunes = 0

    def run(self) -> PartitionResult:
        self._images = [self.first_image] + [None] * (len(self.order) - 1)
        self._nodes_expanded = 1
        self._prunes = 0

        count = self._extend(1)
        return PartitionResult(count, self._nodes_expanded, self._prunes)

    def _extend(self, depth):
        if depth == len(self.order):
            return 1

        adjacency = self.f.adjacency
        anchors = [adjacency[self._images[position]] for position in self.back_neighbors[depth]]

        total = 0
        for candidate in range(self.f.n):
            if not all(candidate in neighbors for neighbors in anchors):
                self._prunes += 1
                continue

            self._nodes_expanded += 1
            self._images[depth] = candidate
            total += self._extend(depth + 1)

        return total

    def __str__(self):
        return 'backtracking(vertex {} -> {})'.format(self.order[0], self.first_image)


def count_homomorphisms_backtracking(
    g: Graph, f: Graph, counter: Optional[HomomorphismCounter] = None
) -> Tuple[int, SearchStats]:
    """
    Counts homomorphisms with the pruned search alone, without any of the fast paths.

    Domain vertices are assigned one at a time in `search_order`; a candidate image is rejected as soon as one of the
    already assigned neighbors has an image not adjacent to it. The search space is split by the image of the first
    vertex and the partitions are executed through `counter`.
    """
    counter = counter or HomomorphismCounter()
    start_time = time.perf_counter()

    if 0 == g.n:
        return 1, SearchStats(0, 0, FastPath.none, time.perf_counter() - start_time)

    order, back_neighbors = search_plan(g)
    partitions = [BacktrackingPartition(order, back_neighbors, f, image) for image in range(f.n)]
    results = counter.count_partitions(*partitions)

    stats = SearchStats(
        nodes_expanded=sum(result.nodes_expanded for result in results),
        prunes=sum(result.prunes for result in results),
        fast_path=FastPath.none,
        elapsed=time.perf_counter() - start_time,
    )
    logger.debug('backtracking', extra={'nodes_expanded': stats.nodes_expanded, 'prunes': stats.prunes})
    return sum(result.count for result in results), stats
