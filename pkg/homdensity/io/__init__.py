from .diagnostics import (
    DiagnosticKind,
    ParseDiagnostic,
)
from .edge_list import (
    parse_edge_list,
    write_edge_list,
)
from .graph6 import (
    GRAPH6_HEADER,
    SHORT_FORM_LIMIT,
    parse_graph6,
    write_graph6,
)
from .readers import (
    EDGE_LIST,
    GRAPH6,
    detect_format,
    read_graph6_lines,
    read_graphs,
    write_graph6_lines,
)
