from .bounds import (
    BoundCheck,
    Relation,
    check_complete_codomain_bound,
    check_complete_domain_bound,
    check_edgeless_iff_one,
    check_isolated_invariance,
    collapsing_mapping,
    density_complete_complete,
)
from .core import (
    density,
    injective_density,
)
from .klass import Density
from .suites import (
    ALIASES,
    SELECTORS,
    SUITES,
    SuiteResult,
    run_suites,
)
