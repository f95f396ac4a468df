import logging
import math
import operator
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from homdensity.engine import (
    HomomorphismCounter,
    VertexMapping,
    count_homomorphisms_backtracking,
    count_mappings,
    is_homomorphism,
    is_injective,
    iter_homomorphisms_naive,
    iter_injective_mappings,
)
from homdensity.exceptions import EmptyCodomain, InvalidOrder
from homdensity.graph import (
    Graph,
    add_isolated,
    complete,
    is_edgeless,
)
from .core import density, injective_density
from .klass import ONE, Density

logger = logging.getLogger(__name__)


class Relation(Enum):
    le = "<="
    ge = ">="
    eq = "=="
    lt = "<"

    def __repr__(self):
        return self.name


RELATION_OPERATORS = {
    Relation.le: operator.le,
    Relation.ge: operator.ge,
    Relation.eq: operator.eq,
    Relation.lt: operator.lt,
}


@dataclass(frozen=True)
class BoundCheck:
    lhs: Density
    rhs: Density
    relation: Relation
    holds: bool
    witness: Optional[VertexMapping] = None

    @classmethod
    def compare(cls, lhs: Density, relation: Relation, rhs: Density, witness=None) -> 'BoundCheck':
        return cls(lhs, rhs, relation, RELATION_OPERATORS[relation](lhs, rhs), witness)

    def __str__(self):
        return "{} {} {} ({})".format(self.lhs, self.relation.value, self.rhs, "holds" if self.holds else "violated")


def _require_codomain_vertex(g_order, f: Graph):
    if 0 == f.n:
        raise EmptyCodomain(g_order)


def collapsing_mapping(g: Graph) -> VertexMapping:
    """
    Sends every vertex to codomain vertex 0, so both endpoints of every edge land on the same vertex. Unless `g` is
    edgeless, this is never a homomorphism into a simple graph.
    """
    return (0,) * g.n


def check_edgeless_iff_one(g: Graph, f: Graph, counter: Optional[HomomorphismCounter] = None) -> BoundCheck:
    """
    Checks that the density is 1 exactly when the domain has no edges.

    For an edgeless domain the claim is ``density == 1``. Otherwise the claim is ``density < 1`` and the check carries
    the collapsing mapping as the witness of a mapping that is not a homomorphism.

    :raises EmptyCodomain: When `f` has no vertices.
    """
    _require_codomain_vertex(g.n, f)
    lhs = density(g, f, counter)

    if is_edgeless(g):
        return BoundCheck.compare(lhs, Relation.eq, ONE)

    return BoundCheck.compare(lhs, Relation.lt, ONE, witness=collapsing_mapping(g))


def check_complete_domain_bound(n: int, f: Graph, counter: Optional[HomomorphismCounter] = None) -> BoundCheck:
    """
    Checks ``t(K_n, f) <= |I| / |M|``.

    The left side goes through the counting engine, the right side is the closed-form falling factorial. If the bound
    fails, the witness is a homomorphism out of K_n that is not injective.
    """
    _require_codomain_vertex(n, f)
    domain = complete(n)
    check = BoundCheck.compare(density(domain, f, counter), Relation.le, injective_density(domain, f))
    if check.holds:
        return check

    witness = next(
        (mapping for mapping in iter_homomorphisms_naive(domain, f, counter) if not is_injective(mapping)),
        None,
    )
    logger.warning('complete_domain_bound_violated', extra={'n': n, 'check': str(check)})
    return BoundCheck.compare(check.lhs, check.relation, check.rhs, witness=witness)


def check_complete_codomain_bound(g: Graph, m: int, counter: Optional[HomomorphismCounter] = None) -> BoundCheck:
    """
    Checks ``t(g, K_m) >= |I| / |M|``. If the bound fails, the witness is an injective mapping into K_m that is not a
    homomorphism.
    """
    if m < 1:
        raise InvalidOrder("Complete codomain", m, 1)

    codomain = complete(m)
    check = BoundCheck.compare(density(g, codomain, counter), Relation.ge, injective_density(g, codomain))
    if check.holds:
        return check

    witness = next(
        (mapping for mapping in iter_injective_mappings(g, codomain) if not is_homomorphism(g, codomain, mapping)),
        None,
    )
    logger.warning('complete_codomain_bound_violated', extra={'m': m, 'check': str(check)})
    return BoundCheck.compare(check.lhs, check.relation, check.rhs, witness=witness)


def density_complete_complete(n: int, m: int) -> Density:
    """
    ``t(K_n, K_m)`` in closed form: homomorphisms between complete graphs are exactly the injective mappings.
    """
    if m < 1:
        raise InvalidOrder("Complete codomain", m, 1)
    return Density.from_counts(math.perm(m, n), m ** n)


def check_isolated_invariance(g: Graph, f: Graph, counter: Optional[HomomorphismCounter] = None) -> BoundCheck:
    """
    Checks that appending an isolated vertex to `g` leaves the density unchanged.

    The extended side is counted by the bare backtracking search, which never strips isolated vertices, so the check
    does not rely on the reduction it is testing.
    """
    _require_codomain_vertex(g.n, f)
    extended = add_isolated(g)
    homomorphisms, _ = count_homomorphisms_backtracking(extended, f, counter)
    extended_density = Density.from_counts(homomorphisms, count_mappings(extended, f))
    return BoundCheck.compare(density(g, f, counter), Relation.eq, extended_density)
