from typing import Optional

from homdensity.engine import (
    HomomorphismCounter,
    count_homomorphisms,
    count_injective,
    count_mappings,
)
from homdensity.exceptions import EmptyCodomain
from homdensity.graph import Graph
from .klass import Density


def require_defined(g: Graph, f: Graph):
    # Without a codomain vertex there are no mappings at all, unless the domain is empty too.
    if 0 == f.n and 0 < g.n:
        raise EmptyCodomain(g.n)


def density(g: Graph, f: Graph, counter: Optional[HomomorphismCounter] = None) -> Density:
    """
    The probability that a uniformly random mapping from V(g) to V(f) is a homomorphism.

    An empty domain has exactly one mapping, the empty one, and it is a homomorphism, so the density is 1.

    :raises EmptyCodomain: When `f` has no vertices and `g` has some.
    """
    require_defined(g, f)
    homomorphisms, _ = count_homomorphisms(g, f, counter)
    return Density.from_counts(homomorphisms, count_mappings(g, f))


def injective_density(g: Graph, f: Graph) -> Density:
    require_defined(g, f)
    return Density.from_counts(count_injective(g, f), count_mappings(g, f))
