import re
from typing import Union

from homdensity.graph import Graph
from .diagnostics import DiagnosticKind, parse_error, with_line

COMMENT_PREFIX = b"#"
_INTEGER = re.compile(rb"-?\d+")


def _lines_with_offsets(data: bytes):
    offset = 0
    for line_number, line in enumerate(data.split(b"\n"), start=1):
        yield line_number, offset, line.rstrip(b"\r")
        offset += len(line) + 1


def parse_edge_list(text: Union[bytes, str]) -> Graph:
    """
    Parses the line-oriented edge-list format.

    The first meaningful line holds the vertex count, every following one an edge ``u v``. Lines starting with ``#``
    are comments and blank lines are skipped; LF and CRLF line endings are both accepted.
    """
    data = text.encode("utf-8") if isinstance(text, str) else bytes(text)

    n = None
    seen = set()
    edges = []
    for line_number, line_offset, line in _lines_with_offsets(data):
        stripped = line.strip()
        if not stripped or stripped.startswith(COMMENT_PREFIX):
            continue

        token_offset = line_offset + len(line) - len(line.lstrip())
        tokens = stripped.split()

        if n is None:
            if len(tokens) != 1 or not _INTEGER.fullmatch(tokens[0]) or int(tokens[0]) < 0:
                raise with_line(
                    parse_error(DiagnosticKind.bad_header, token_offset, reason="expected a nonnegative vertex count"),
                    line_number,
                )
            n = int(tokens[0])
            continue

        if len(tokens) != 2 or not all(_INTEGER.fullmatch(token) for token in tokens):
            raise with_line(
                parse_error(DiagnosticKind.bad_edge_line, token_offset, text=stripped.decode("utf-8", "replace")),
                line_number,
            )

        u, v = map(int, tokens)
        for vertex in (u, v):
            if not 0 <= vertex < n:
                raise with_line(parse_error(DiagnosticKind.out_of_range, token_offset, vertex=vertex, n=n), line_number)
        if u == v:
            raise with_line(parse_error(DiagnosticKind.self_loop, token_offset, u=u), line_number)

        key = (min(u, v), max(u, v))
        if key in seen:
            raise with_line(parse_error(DiagnosticKind.duplicate, token_offset, u=u, v=v), line_number)

        seen.add(key)
        edges.append(key)

    if n is None:
        raise parse_error(DiagnosticKind.bad_header, 0, reason="missing vertex count")

    return Graph(n, edges)


def write_edge_list(g: Graph) -> str:
    return "".join(["{}\n".format(g.n)] + ["{} {}\n".format(u, v) for u, v in g.sorted_edges()])
