from collections import OrderedDict
from dataclasses import dataclass, field
from typing import List, Optional

from homdensity.corpus import CorpusSpec, sample_pairs
from homdensity.engine import (
    HomomorphismCounter,
    VertexMapping,
    count_homomorphisms_naive,
    count_mappings,
    is_homomorphism,
    is_injective,
    iter_homomorphisms_naive,
    iter_injective_mappings,
)
from homdensity.graph import (
    Graph,
    add_isolated,
    complete,
)
from homdensity.io import write_graph6
from .bounds import (
    check_complete_codomain_bound,
    check_complete_domain_bound,
    check_edgeless_iff_one,
    check_isolated_invariance,
    density_complete_complete,
)
from .core import density
from .klass import Density

ALL = "all"


@dataclass
class Failure:
    domain: Graph
    codomain: Graph
    witness: Optional[VertexMapping] = None
    detail: str = ""

    def describe(self):
        return "domain={} codomain={} witness={} {}".format(
            write_graph6(self.domain).decode("ascii"),
            write_graph6(self.codomain).decode("ascii"),
            list(self.witness) if self.witness is not None else "-",
            self.detail,
        ).rstrip()


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    passed: int = 0
    skipped: int = 0
    failures: List[Failure] = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def record(self, holds, domain, codomain, witness=None, detail=""):
        self.checked += 1
        if holds:
            self.passed += 1
        else:
            self.failures.append(Failure(domain, codomain, witness, detail))

    def as_record(self, include_failures=False):
        record = OrderedDict(
            [
                ("suite", self.name),
                ("checked", self.checked),
                ("passed", self.passed),
                ("failed", len(self.failures)),
                ("skipped", self.skipped),
            ]
        )
        if include_failures:
            record["failures"] = [failure.describe() for failure in self.failures]
        return record


def edgeless_iff_one(corpus: CorpusSpec, counter: HomomorphismCounter) -> SuiteResult:
    result = SuiteResult("edgeless-iff-one")
    for g, f in sample_pairs(corpus):
        if 0 == f.n:
            result.skipped += 1
            continue

        check = check_edgeless_iff_one(g, f, counter)
        witness_fails = check.witness is None or not is_homomorphism(g, f, check.witness)
        result.record(check.holds and witness_fails, g, f, check.witness, str(check))
    return result


def clique_injective(corpus: CorpusSpec, counter: HomomorphismCounter) -> SuiteResult:
    """Every homomorphism out of K_n, n taken from the sampled domain's order, has pairwise distinct images."""
    result = SuiteResult("clique-injective")
    for g, f in sample_pairs(corpus):
        domain = complete(g.n)
        witness = next(
            (mapping for mapping in iter_homomorphisms_naive(domain, f, counter) if not is_injective(mapping)),
            None,
        )
        result.record(witness is None, domain, f, witness, "non-injective homomorphism")
    return result


def coloring_injective(corpus: CorpusSpec, counter: HomomorphismCounter) -> SuiteResult:
    """Every injective mapping into K_m, m taken from the sampled codomain's order, is a homomorphism."""
    result = SuiteResult("coloring-injective")
    for g, f in sample_pairs(corpus):
        codomain = complete(f.n)
        witness = next(
            (mapping for mapping in iter_injective_mappings(g, codomain) if not is_homomorphism(g, codomain, mapping)),
            None,
        )
        result.record(witness is None, g, codomain, witness, "injective non-homomorphism")
    return result


def clique_bound(corpus: CorpusSpec, counter: HomomorphismCounter) -> SuiteResult:
    result = SuiteResult("clique-bound")
    for g, f in sample_pairs(corpus):
        if 0 == f.n:
            result.skipped += 1
            continue

        check = check_complete_domain_bound(g.n, f, counter)
        result.record(check.holds, complete(g.n), f, check.witness, str(check))
    return result


def coloring_bound(corpus: CorpusSpec, counter: HomomorphismCounter) -> SuiteResult:
    result = SuiteResult("coloring-bound")
    for g, f in sample_pairs(corpus):
        if 0 == f.n:
            result.skipped += 1
            continue

        check = check_complete_codomain_bound(g, f.n, counter)
        result.record(check.holds, g, complete(f.n), check.witness, str(check))
    return result


def complete_closed_form(corpus: CorpusSpec, counter: HomomorphismCounter) -> SuiteResult:
    """
    Compares the closed form for ``t(K_n, K_m)`` with enumeration and with the engine, for every n and m in the
    corpus vertex range. The random part of the corpus is not used.
    """
    result = SuiteResult("complete-closed-form")
    for n in corpus.n_range:
        for m in corpus.n_range:
            if 0 == m:
                result.skipped += 1
                continue

            domain, codomain = complete(n), complete(m)
            closed_form = density_complete_complete(n, m)
            enumerated = Density.from_counts(
                count_homomorphisms_naive(domain, codomain, counter), count_mappings(domain, codomain)
            )
            dispatched = density(domain, codomain, counter)
            detail = "closed form {}, enumerated {}, engine {}".format(closed_form, enumerated, dispatched)
            result.record(closed_form == enumerated == dispatched, domain, codomain, detail=detail)
    return result


def isolated_invariance(corpus: CorpusSpec, counter: HomomorphismCounter) -> SuiteResult:
    """
    The density is unchanged by an added isolated vertex, and the homomorphism count grows by exactly a factor of
    |V(f)|. The counts are taken from the enumeration oracle.
    """
    result = SuiteResult("isolated-invariance")
    for g, f in sample_pairs(corpus):
        if 0 == f.n:
            result.skipped += 1
            continue

        check = check_isolated_invariance(g, f, counter)
        base = count_homomorphisms_naive(g, f, counter)
        extended = count_homomorphisms_naive(add_isolated(g), f, counter)
        detail = "{}; hom {} -> {} with |V(f)|={}".format(check, base, extended, f.n)
        result.record(check.holds and extended == f.n * base, g, f, detail=detail)
    return result


SUITES = OrderedDict(
    [
        ("edgeless-iff-one", edgeless_iff_one),
        ("clique-injective", clique_injective),
        ("coloring-injective", coloring_injective),
        ("clique-bound", clique_bound),
        ("coloring-bound", coloring_bound),
        ("complete-closed-form", complete_closed_form),
        ("isolated-invariance", isolated_invariance),
    ]
)

# Numbered aliases for the suites, in the order the suites are listed.
ALIASES = OrderedDict(
    [
        ("thm2.1", "edgeless-iff-one"),
        ("lem2.2", "clique-injective"),
        ("lem2.3", "coloring-injective"),
        ("thm2.4", "clique-bound"),
        ("thm2.5", "coloring-bound"),
        ("cor2.5.1", "complete-closed-form"),
        ("thm2.6", "isolated-invariance"),
    ]
)

SELECTORS = tuple(ALIASES) + tuple(SUITES) + (ALL,)


def run_suites(selector: str, corpus: CorpusSpec, counter: Optional[HomomorphismCounter] = None) -> List[SuiteResult]:
    """
    Runs the property suite named by `selector`, either its name or its numbered alias, or every suite for ``all``,
    over `corpus`.

    :raises KeyError: For an unknown selector.
    :raises BudgetExceeded: When an enumeration in a suite exceeds the counter's budget.
    """
    counter = counter or HomomorphismCounter()
    names = list(SUITES) if selector == ALL else [ALIASES.get(selector, selector)]
    return [SUITES[name](corpus, counter) for name in names]
