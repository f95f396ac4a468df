from .families import (
    FAMILIES,
    complete,
    cycle,
    edgeless,
    path,
)
from .klass import (
    DegreeInfo,
    Edge,
    Graph,
    new_graph,
)
from .operations import (
    add_edge,
    add_isolated,
    complement,
    degree,
    degrees,
    is_complete,
    is_edgeless,
    isolated_vertices,
    strip_isolated,
)
