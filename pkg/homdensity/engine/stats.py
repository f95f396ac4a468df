from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple


class FastPath(Enum):
    none = "none"
    edgeless_domain = "edgeless_domain"
    stripped_isolated = "stripped_isolated"
    complete_domain = "complete_domain"
    complete_codomain = "complete_codomain"

    def __repr__(self):
        return self.name


class PartitionResult(NamedTuple):
    count: int
    nodes_expanded: int
    prunes: int


@dataclass(frozen=True)
class SearchStats:
    nodes_expanded: int
    prunes: int
    fast_path: FastPath
    elapsed: float

    @property
    def deterministic_fields(self):
        # Everything except the wall-clock time.
        return self.nodes_expanded, self.prunes, self.fast_path
