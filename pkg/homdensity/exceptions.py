class HomDensityException(Exception):
    pass


class GraphException(HomDensityException):
    pass


class SelfLoop(GraphException):
    def __init__(self, vertex):
        super().__init__("Self-loop at vertex {}.".format(vertex))
        self.vertex = vertex


class DuplicateEdge(GraphException):
    def __init__(self, u, v):
        super().__init__("Edge {{{}, {}}} is listed more than once.".format(u, v))
        self.edge = (u, v)


class VertexOutOfRange(GraphException):
    def __init__(self, vertex, n):
        super().__init__("Vertex {} is out of range for a graph on {} vertices.".format(vertex, n))
        self.vertex = vertex
        self.n = n


class InvalidOrder(GraphException):
    def __init__(self, family, n, minimum):
        super().__init__("{} needs at least {} vertices, got {}.".format(family, minimum, n))
        self.family = family
        self.n = n
        self.minimum = minimum


class GraphFormatException(HomDensityException):
    pass


class GraphParseException(GraphFormatException):
    def __init__(self, diagnostic):
        super().__init__(str(diagnostic))
        self.diagnostic = diagnostic


class TooLarge(GraphFormatException):
    def __init__(self, n, limit):
        super().__init__("graph6 short form holds at most {} vertices, got {}.".format(limit, n))
        self.n = n
        self.limit = limit


class CountingException(HomDensityException):
    pass


class BudgetExceeded(CountingException):
    def __init__(self, mappings, budget):
        super().__init__(
            "Enumerating {} mappings exceeds the oracle budget of {}.".format(mappings, budget)
        )
        self.mappings = mappings
        self.budget = budget


class MappingArityMismatch(CountingException):
    def __init__(self, length, n):
        super().__init__("Mapping assigns {} vertices but the domain has {}.".format(length, n))
        self.length = length
        self.n = n


class ImageOutOfRange(CountingException):
    def __init__(self, vertex, image, m):
        super().__init__(
            "Vertex {} maps to {}, outside a codomain of {} vertices.".format(vertex, image, m)
        )
        self.vertex = vertex
        self.image = image
        self.m = m


class DensityException(HomDensityException):
    pass


class EmptyCodomain(DensityException):
    def __init__(self, n):
        super().__init__(
            "Density is undefined from a graph on {} vertices into the empty graph.".format(n)
        )
        self.n = n


class DensityRangeException(DensityException):
    pass


class CorpusException(HomDensityException):
    pass


class CountMismatch(CountingException):
    def __init__(self, counts):
        super().__init__(
            "Counting methods disagree: {}.".format(", ".join("{}={}".format(k, v) for k, v in counts.items()))
        )
        self.counts = counts
