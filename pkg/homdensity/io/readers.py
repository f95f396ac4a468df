import logging
import os
import sys
from typing import Iterable, List, Optional, Union

from homdensity.exceptions import GraphFormatException, GraphParseException
from homdensity.graph import Graph
from homdensity.utils import listify
from .diagnostics import with_line
from .edge_list import parse_edge_list
from .graph6 import parse_graph6, write_graph6

logger = logging.getLogger(__name__)

GRAPH6 = "g6"
EDGE_LIST = "el"
FORMATS = (GRAPH6, EDGE_LIST)

EXTENSIONS = {
    ".g6": GRAPH6,
    ".el": EDGE_LIST,
}

STDIN = "-"


def detect_format(path: str, forced: Optional[str] = None) -> str:
    """
    Picks the graph format for `path`.

    :param path:
        A file path, or ``-`` for standard input.
    :param forced:
        A format name that overrides detection.
    :return:
        One of ``g6`` or ``el``. Standard input defaults to the edge-list format.
    """
    if forced is not None:
        if forced not in FORMATS:
            raise GraphFormatException("Unknown graph format {!r}, expected one of {}.".format(forced, FORMATS))
        return forced

    if path == STDIN:
        return EDGE_LIST

    extension = os.path.splitext(path)[1].lower()
    if extension not in EXTENSIONS:
        raise GraphFormatException(
            "Cannot detect the format of {!r}; use a .g6 or .el extension or force a format.".format(path)
        )
    return EXTENSIONS[extension]


@listify
def read_graph6_lines(lines: Iterable[Union[bytes, str]]):
    for line_number, line in enumerate(lines, start=1):
        if not line.strip():
            continue

        try:
            yield parse_graph6(line)
        except GraphParseException as exception:
            raise with_line(exception, line_number)


def write_graph6_lines(graphs: Iterable[Graph]) -> bytes:
    return b"".join(write_graph6(g) + b"\n" for g in graphs)


def _read_bytes(path):
    if path == STDIN:
        return sys.stdin.buffer.read()
    with open(path, "rb") as fp:
        return fp.read()


def read_graphs(path: str, fmt: Optional[str] = None) -> List[Graph]:
    fmt = detect_format(path, fmt)
    data = _read_bytes(path)

    if fmt == GRAPH6:
        graphs = read_graph6_lines(data.split(b"\n"))
    else:
        graphs = [parse_edge_list(data)]

    logger.debug("read_graphs", extra={"path": path, "format": fmt, "graph_count": len(graphs)})
    return graphs
