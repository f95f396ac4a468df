from .density import (
    BoundCheck,
    Density,
    Relation,
    check_complete_codomain_bound,
    check_complete_domain_bound,
    check_edgeless_iff_one,
    check_isolated_invariance,
    density_complete_complete,
    injective_density,
)
from .engine import (
    FastPath,
    HomomorphismCounter,
    SearchStats,
    count_homomorphisms,
    count_homomorphisms_naive,
    count_injective,
    count_mappings,
    count_ordered_cliques,
    count_proper_colorings,
    is_homomorphism,
)
from .exceptions import HomDensityException
from .graph import (
    Graph,
    complement,
    complete,
    cycle,
    degree,
    edgeless,
    is_edgeless,
    new_graph,
    path,
    strip_isolated,
)
from .io import (
    parse_edge_list,
    parse_graph6,
    write_edge_list,
    write_graph6,
)

__version__ = "1.0.0"
