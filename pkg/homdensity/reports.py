import logging
import statistics
import time
from collections import OrderedDict
from dataclasses import dataclass
from typing import List, Optional

from homdensity.density import Density
from homdensity.density.core import require_defined
from homdensity.engine import (
    HomomorphismCounter,
    count_homomorphisms,
    count_homomorphisms_backtracking,
    count_homomorphisms_naive,
    count_injective,
    count_mappings,
)
from homdensity.exceptions import CountMismatch
from homdensity.graph import Graph

logger = logging.getLogger(__name__)

NAIVE = "naive"
ENGINE = "engine"
BACKTRACKING = "backtracking"


@dataclass(frozen=True)
class CountReport:
    domain_spec: str
    codomain_spec: str
    mappings: int
    injective: int
    homomorphisms: int
    density: Density
    fast_path: str
    elapsed: float

    def as_record(self):
        return OrderedDict(
            [
                ("domain", self.domain_spec),
                ("codomain", self.codomain_spec),
                ("mappings", self.mappings),
                ("injective", self.injective),
                ("homomorphisms", self.homomorphisms),
                ("density", self.density),
                ("fast_path", self.fast_path),
                ("elapsed", self.elapsed),
            ]
        )


def build_count_report(
    domain_spec: str,
    g: Graph,
    codomain_spec: str,
    f: Graph,
    counter: Optional[HomomorphismCounter] = None,
    naive: bool = False,
) -> CountReport:
    """
    Counts |M|, |I| and |H| for one pair of graphs and bundles them with the density.

    :param naive:
        Count homomorphisms with the enumeration oracle instead of the dispatched engine.
    :raises EmptyCodomain: When the density is undefined.
    :raises BudgetExceeded: When `naive` is set and the enumeration is too large.
    """
    require_defined(g, f)
    start_time = time.perf_counter()

    if naive:
        homomorphisms, fast_path = count_homomorphisms_naive(g, f, counter), NAIVE
    else:
        homomorphisms, stats = count_homomorphisms(g, f, counter)
        fast_path = stats.fast_path.value

    mappings = count_mappings(g, f)
    return CountReport(
        domain_spec=domain_spec,
        codomain_spec=codomain_spec,
        mappings=mappings,
        injective=count_injective(g, f),
        homomorphisms=homomorphisms,
        density=Density.from_counts(homomorphisms, mappings),
        fast_path=fast_path,
        elapsed=time.perf_counter() - start_time,
    )


@dataclass(frozen=True)
class BenchRow:
    method: str
    homomorphisms: int
    nodes_expanded: int
    prunes: int
    fast_path: str
    mean_seconds: float
    min_seconds: float

    def as_record(self):
        return OrderedDict(
            (name, getattr(self, name))
            for name in ("method", "homomorphisms", "nodes_expanded", "prunes", "fast_path", "mean_seconds",
                         "min_seconds")
        )


def _timed(func, repetitions):
    timings, result = [], None
    for _ in range(repetitions):
        start_time = time.perf_counter()
        result = func()
        timings.append(time.perf_counter() - start_time)
    return result, timings


def run_bench(g: Graph, f: Graph, repetitions: int, counter: Optional[HomomorphismCounter] = None) -> List[BenchRow]:
    """
    Times the enumeration oracle against the dispatched engine and the bare backtracking search.

    All three counts are compared before any timing is returned.

    :raises CountMismatch: When the methods disagree.
    :raises BudgetExceeded: When the oracle side is too large.
    """
    counter = counter or HomomorphismCounter()
    repetitions = max(repetitions, 1)

    naive_count, naive_timings = _timed(lambda: count_homomorphisms_naive(g, f, counter), repetitions)
    (engine_count, engine_stats), engine_timings = _timed(lambda: count_homomorphisms(g, f, counter), repetitions)
    (search_count, search_stats), search_timings = _timed(
        lambda: count_homomorphisms_backtracking(g, f, counter), repetitions
    )

    counts = OrderedDict([(NAIVE, naive_count), (ENGINE, engine_count), (BACKTRACKING, search_count)])
    if len(set(counts.values())) != 1:
        raise CountMismatch(counts)

    logger.info('bench', extra={'homomorphisms': naive_count, 'repetitions': repetitions})
    return [
        BenchRow(NAIVE, naive_count, count_mappings(g, f), 0, NAIVE,
                 statistics.mean(naive_timings), min(naive_timings)),
        BenchRow(ENGINE, engine_count, engine_stats.nodes_expanded, engine_stats.prunes, engine_stats.fast_path.value,
                 statistics.mean(engine_timings), min(engine_timings)),
        BenchRow(BACKTRACKING, search_count, search_stats.nodes_expanded, search_stats.prunes,
                 search_stats.fast_path.value, statistics.mean(search_timings), min(search_timings)),
    ]
