from .backtracking import (
    count_homomorphisms_backtracking,
    search_order,
)
from .cliques import count_ordered_cliques
from .colorings import count_proper_colorings
from .counter import HomomorphismCounter
from .counts import (
    count_injective,
    count_mappings,
)
from .dispatch import count_homomorphisms
from .mapping import (
    VertexMapping,
    is_homomorphism,
    is_injective,
)
from .naive import (
    count_homomorphisms_naive,
    iter_homomorphisms_naive,
    iter_injective_mappings,
    iter_mappings,
)
from .stats import (
    FastPath,
    SearchStats,
)
