import logging
import time
from typing import Optional, Tuple

from homdensity.graph import (
    Graph,
    is_complete,
    strip_isolated,
)
from .backtracking import count_homomorphisms_backtracking
from .cliques import count_ordered_cliques
from .colorings import count_proper_colorings
from .counter import HomomorphismCounter
from .stats import FastPath, SearchStats

logger = logging.getLogger(__name__)


def count_homomorphisms(g: Graph, f: Graph, counter: Optional[HomomorphismCounter] = None) -> Tuple[int, SearchStats]:
    """
    Counts the homomorphisms from `g` into `f` exactly, picking the cheapest applicable algorithm.

    The dispatch order is fixed:

    1. Isolated domain vertices are stripped. Each of them may go anywhere, so the final count is multiplied by
       ``|V(f)| ** k``.
    2. An empty reduced domain has exactly one mapping, and it is a homomorphism.
    3. A complete reduced domain is counted as ordered cliques of `f`.
    4. A complete codomain is counted as proper colorings of the reduced domain.
    5. Anything else goes to the pruned backtracking search.

    :param g: The domain graph.
    :param f: The codomain graph.
    :param counter: Executes the backtracking partitions; a plain counter is used when omitted.
    :return: The count and the `SearchStats` of the run, tagged with the fast path that was used.
    """
    start_time = time.perf_counter()
    stripped, k = strip_isolated(g)
    multiplier = f.n ** k
    nodes_expanded = prunes = 0

    if 0 == stripped.n:
        count, fast_path = 1, FastPath.edgeless_domain

    elif is_complete(stripped):
        count, fast_path = count_ordered_cliques(f, stripped.n), FastPath.complete_domain

    elif is_complete(f):
        count, fast_path = count_proper_colorings(stripped, f.n), FastPath.complete_codomain

    else:
        count, search_stats = count_homomorphisms_backtracking(stripped, f, counter)
        nodes_expanded, prunes = search_stats.nodes_expanded, search_stats.prunes
        fast_path = FastPath.stripped_isolated if k else FastPath.none

    stats = SearchStats(nodes_expanded, prunes, fast_path, time.perf_counter() - start_time)
    logger.info(
        'count_homomorphisms',
        extra={'fast_path': fast_path.value, 'isolated_stripped': k, 'nodes_expanded': nodes_expanded},
    )
    return count * multiplier, stats
