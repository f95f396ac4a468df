from typing import Union

from homdensity.exceptions import TooLarge
from homdensity.graph import Graph
from homdensity.utils import chunks, column_major_pairs
from .diagnostics import DiagnosticKind, parse_error

GRAPH6_HEADER = b">>graph6<<"
SHORT_FORM_LIMIT = 62
OFFSET = 63
MAX_BODY_BYTE = 126
BITS_PER_BYTE = 6

# sparse6 and digraph6 records start with these characters
FOREIGN_PREFIXES = {ord(":"): "sparse6", ord("&"): "digraph6"}


def _as_bytes(text: Union[bytes, str]) -> bytes:
    return text.encode("utf-8") if isinstance(text, str) else bytes(text)


def _body_byte_count(n):
    return (n * (n - 1) // 2 + BITS_PER_BYTE - 1) // BITS_PER_BYTE


def parse_graph6(text: Union[bytes, str]) -> Graph:
    """
    Parses one short-form graph6 record.

    The optional ``>>graph6<<`` header is skipped and trailing whitespace is ignored. Padding bits after the upper
    triangle are not inspected.

    :param text:
        The record as bytes or an ASCII string.
    :return:
        The decoded graph.
    :raises GraphParseException:
        With a diagnostic pointing at the offending byte.
    """
    data = _as_bytes(text).rstrip()

    start = 0
    if data.startswith(b">>"):
        if not data.startswith(GRAPH6_HEADER):
            raise parse_error(DiagnosticKind.bad_header, 0, reason="only >>graph6<< is accepted")
        start = len(GRAPH6_HEADER)

    if start >= len(data):
        raise parse_error(DiagnosticKind.bad_size_byte, max(len(data) - 1, 0), value=b"")

    size_byte = data[start]
    if size_byte in FOREIGN_PREFIXES:
        raise parse_error(
            DiagnosticKind.bad_header, start, reason="{} records are not supported".format(FOREIGN_PREFIXES[size_byte])
        )
    if not OFFSET <= size_byte <= OFFSET + SHORT_FORM_LIMIT:
        raise parse_error(DiagnosticKind.bad_size_byte, start, value=bytes([size_byte]))

    n = size_byte - OFFSET
    body_start = start + 1
    body_end = body_start + _body_byte_count(n)
    body = data[body_start:body_end]

    for index, value in enumerate(body, start=body_start):
        if not OFFSET <= value <= MAX_BODY_BYTE:
            raise parse_error(DiagnosticKind.char_out_of_range, index, value=bytes([value]))

    if len(body) < body_end - body_start:
        raise parse_error(
            DiagnosticKind.truncated_bits, len(data) - 1, expected=body_end - body_start, n=n, found=len(body)
        )

    if len(data) > body_end:
        raise parse_error(DiagnosticKind.trailing_data, body_end)

    bits = [
        (value - OFFSET) >> shift & 1
        for value in body
        for shift in range(BITS_PER_BYTE - 1, -1, -1)
    ]
    return Graph(n, [pair for pair, bit in zip(column_major_pairs(n), bits) if bit])


def write_graph6(g: Graph) -> bytes:
    if g.n > SHORT_FORM_LIMIT:
        raise TooLarge(g.n, SHORT_FORM_LIMIT)

    bits = [1 if pair in g.edges else 0 for pair in column_major_pairs(g.n)]
    bits += [0] * (-len(bits) % BITS_PER_BYTE)

    body = [
        OFFSET + sum(bit << (BITS_PER_BYTE - 1 - position) for position, bit in enumerate(group))
        for group in chunks(bits, BITS_PER_BYTE)
    ]
    return bytes([OFFSET + g.n] + body)
