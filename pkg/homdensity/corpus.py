import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Tuple

from homdensity import settings
from homdensity.exceptions import CorpusException
from homdensity.graph import Graph
from homdensity.utils import pairs

MAX_SEED = 2 ** 64


@dataclass(frozen=True)
class CorpusSpec:
    """
    Describes a reproducible random corpus of graphs.

    Graphs are drawn with Python's Mersenne Twister (MT19937) seeded with `seed`. Each graph first draws its order
    with ``randint(n_min, n_max)``, then keeps each of its vertex pairs, in lexicographic order, when ``random()``
    falls below `edge_probability`.
    """

    n_min: int = settings.corpus_n_min
    n_max: int = settings.corpus_n_max
    edge_probability: Fraction = settings.corpus_edge_probability
    samples: int = settings.corpus_samples
    seed: int = settings.corpus_seed

    def __post_init__(self):
        object.__setattr__(self, "edge_probability", Fraction(self.edge_probability))

        if not 0 <= self.n_min <= self.n_max:
            raise CorpusException(
                "The vertex range {}..{} must be nonempty and nonnegative.".format(self.n_min, self.n_max)
            )
        if not 0 <= self.edge_probability <= 1:
            raise CorpusException("Edge probability {} is outside [0, 1].".format(self.edge_probability))
        if self.samples < 0:
            raise CorpusException("The sample count must be nonnegative, got {}.".format(self.samples))
        if not 0 <= self.seed < MAX_SEED:
            raise CorpusException("The seed must be an unsigned 64-bit integer, got {}.".format(self.seed))

    @property
    def n_range(self) -> range:
        return range(self.n_min, self.n_max + 1)

    def rng(self) -> random.Random:
        return random.Random(self.seed)


def random_graph(rng: random.Random, n: int, edge_probability) -> Graph:
    return Graph(n, [pair for pair in pairs(n) if rng.random() < edge_probability])


def _draw(rng, spec):
    return random_graph(rng, rng.randint(spec.n_min, spec.n_max), spec.edge_probability)


def sample_graphs(spec: CorpusSpec) -> Iterator[Graph]:
    rng = spec.rng()
    for _ in range(spec.samples):
        yield _draw(rng, spec)


def sample_pairs(spec: CorpusSpec) -> Iterator[Tuple[Graph, Graph]]:
    """Yields `spec.samples` independent (domain, codomain) pairs."""
    rng = spec.rng()
    for _ in range(spec.samples):
        yield _draw(rng, spec), _draw(rng, spec)


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """
    Every labeled simple graph on `n` vertices, one for each subset of the vertex pairs: ``2 ** (n(n-1)/2)`` graphs.
    """
    candidates = pairs(n)
    for mask in range(2 ** len(candidates)):
        yield Graph(n, [pair for bit, pair in enumerate(candidates) if mask >> bit & 1])
