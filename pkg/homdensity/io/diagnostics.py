from dataclasses import dataclass
from enum import Enum
from typing import Optional

from homdensity.exceptions import GraphParseException


class DiagnosticKind(Enum):
    bad_header = "bad_header"
    bad_size_byte = "bad_size_byte"
    truncated_bits = "truncated_bits"
    char_out_of_range = "char_out_of_range"
    trailing_data = "trailing_data"
    bad_edge_line = "bad_edge_line"
    duplicate = "duplicate"
    self_loop = "self_loop"
    out_of_range = "out_of_range"

    def __repr__(self):
        return self.name


MESSAGE_TEMPLATES = {
    DiagnosticKind.bad_header: "unsupported or malformed header: {reason}",
    DiagnosticKind.bad_size_byte: "size byte {value!r} is outside 63..125 (short form holds at most 62 vertices)",
    DiagnosticKind.truncated_bits: "expected {expected} adjacency bytes for {n} vertices, found {found}",
    DiagnosticKind.char_out_of_range: "byte {value!r} is outside the printable range 63..126",
    DiagnosticKind.trailing_data: "unexpected content after a complete record",
    DiagnosticKind.bad_edge_line: "expected two integers 'u v', got {text!r}",
    DiagnosticKind.duplicate: "edge {{{u}, {v}}} is listed more than once",
    DiagnosticKind.self_loop: "self-loop at vertex {u}",
    DiagnosticKind.out_of_range: "vertex {vertex} is out of range for a graph on {n} vertices",
}


@dataclass(frozen=True)
class ParseDiagnostic:
    byte_offset: int
    message: str
    kind: DiagnosticKind
    line: Optional[int] = None

    def at_line(self, line):
        return ParseDiagnostic(self.byte_offset, self.message, self.kind, line)

    def __str__(self):
        location = "byte {}".format(self.byte_offset)
        if self.line is not None:
            location = "line {}, {}".format(self.line, location)
        return "{}: {}".format(location, self.message)


def parse_error(kind: DiagnosticKind, byte_offset: int, **details) -> GraphParseException:
    """
    Builds the exception for a rejected input. The message is rendered from the template registered for `kind`.
    """
    return GraphParseException(ParseDiagnostic(byte_offset, MESSAGE_TEMPLATES[kind].format(**details), kind))


def with_line(exception: GraphParseException, line: int) -> GraphParseException:
    exception.diagnostic = exception.diagnostic.at_line(line)
    exception.args = (str(exception.diagnostic),)
    return exception
