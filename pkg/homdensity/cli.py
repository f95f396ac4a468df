"""
Command-line front end.

Subcommands::

    homdensity count K4 K5 --json          # |M|, |I|, |H| and the density of one pair
    homdensity verify all --n-max 5        # run property suites over a seeded random corpus
    homdensity bench P4 C6 5               # oracle vs. engine timings
    homdensity gen corpus.g6 --samples 10  # write a seeded corpus as graph6 lines

Graphs are given as files (``.g6`` or ``.el``, or forced with ``--format``) or as family specifiers: ``K4``
(complete), ``P3`` (path), ``C6`` (cycle), ``E5`` (edgeless).
"""
import argparse
import logging
import re
import sys
from fractions import Fraction

from homdensity import __version__, settings
from homdensity.corpus import CorpusSpec, sample_graphs
from homdensity.density import SELECTORS, run_suites
from homdensity.engine import HomomorphismCounter
from homdensity.exceptions import (
    BudgetExceeded,
    CorpusException,
    CountMismatch,
    EmptyCodomain,
    GraphException,
    GraphFormatException,
)
from homdensity.graph import FAMILIES
from homdensity.io import read_graphs, write_graph6_lines
from homdensity.io.readers import FORMATS, STDIN
from homdensity.middleware import ThreadPoolConcurrencyMiddleware, log_middleware
from homdensity.reports import build_count_report, run_bench
from homdensity.widgets import CSV, JSON, Table

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_PARSE_ERROR = 2
EXIT_UNDEFINED_DENSITY = 3
EXIT_BUDGET_EXCEEDED = 4

# First match wins.
EXIT_CODES = (
    (GraphFormatException, EXIT_PARSE_ERROR),
    (GraphException, EXIT_PARSE_ERROR),
    (CorpusException, EXIT_PARSE_ERROR),
    (OSError, EXIT_PARSE_ERROR),
    (EmptyCodomain, EXIT_UNDEFINED_DENSITY),
    (BudgetExceeded, EXIT_BUDGET_EXCEEDED),
    (CountMismatch, EXIT_VIOLATION),
)

FAMILY_SPECIFIER = re.compile(r"^([{}])(\d+)$".format("".join(FAMILIES)))

LOG_LEVELS = {0: logging.WARNING, 1: logging.INFO}


def resolve_graph(spec, fmt=None):
    """
    Turns a command-line graph argument into a graph: a family specifier such as ``K4`` or a path to a graph file.
    Of a file holding several graph6 records only the first is used.
    """
    match = FAMILY_SPECIFIER.match(spec)
    if match:
        family, n = match.groups()
        return FAMILIES[family](int(n))

    graphs = read_graphs(spec, fmt)
    if not graphs:
        raise GraphFormatException("{} does not contain a graph.".format(spec))
    if len(graphs) > 1:
        logger.warning('using_first_graph', extra={'path': spec, 'graph_count': len(graphs)})
    return graphs[0]


def make_counter(args):
    middlewares = [log_middleware]
    if args.threads > 1:
        middlewares.insert(0, ThreadPoolConcurrencyMiddleware(max_processes=args.threads))
    return HomomorphismCounter(budget=args.budget, middlewares=middlewares)


def make_corpus(args):
    return CorpusSpec(
        n_min=args.n_min,
        n_max=args.n_max,
        edge_probability=args.p,
        samples=args.samples,
        seed=args.seed,
    )


def render(records, args, single=False):
    if args.json:
        return JSON(single=single).transform(records)
    if args.csv:
        return CSV().transform(records).rstrip("\n")
    return Table().transform(records)


def cmd_count(args):
    g = resolve_graph(args.domain, args.fmt)
    f = resolve_graph(args.codomain, args.fmt)
    report = build_count_report(args.domain, g, args.codomain, f, make_counter(args), naive=args.naive)
    print(render([report.as_record()], args, single=True))
    return EXIT_OK


def cmd_verify(args):
    results = run_suites(args.selector, make_corpus(args), make_counter(args))

    print(render([result.as_record(include_failures=args.json) for result in results], args))
    if not args.json:
        for result in results:
            for failure in result.failures:
                print("FAIL {}: {}".format(result.name, failure.describe()))

    return EXIT_OK if all(result.ok for result in results) else EXIT_VIOLATION


def cmd_bench(args):
    g = resolve_graph(args.domain, args.fmt)
    f = resolve_graph(args.codomain, args.fmt)
    rows = run_bench(g, f, args.repetitions, make_counter(args))
    print(render([row.as_record() for row in rows], args))
    return EXIT_OK


def cmd_gen(args):
    corpus = make_corpus(args)
    data = write_graph6_lines(sample_graphs(corpus))

    if args.output == STDIN:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        with open(args.output, "wb") as fp:
            fp.write(data)

    logger.info('gen', extra={'output': args.output, 'samples': corpus.samples, 'seed': corpus.seed})
    return EXIT_OK


def _add_corpus_arguments(parser):
    parser.add_argument("--n-min", type=int, default=settings.corpus_n_min, help="smallest vertex count")
    parser.add_argument("--n-max", type=int, default=settings.corpus_n_max, help="largest vertex count")
    parser.add_argument("--p", type=Fraction, default=settings.corpus_edge_probability,
                        help="edge probability, as a fraction (1/2) or decimal (0.5)")
    parser.add_argument("--samples", type=int, default=settings.corpus_samples, help="number of samples")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print JSON")
    common.add_argument("--csv", action="store_true", help="print CSV")
    common.add_argument("--threads", type=int, default=settings.default_threads,
                        help="worker threads for partitioned searches (checks scheduling; no speedup)")
    common.add_argument("--budget", type=int, default=settings.naive_budget,
                        help="largest number of mappings the enumeration oracle may visit")
    common.add_argument("--seed", type=int, default=settings.corpus_seed, help="corpus seed")
    common.add_argument("--naive", action="store_true", help="count with the enumeration oracle")
    common.add_argument("--format", dest="fmt", choices=FORMATS, help="force the graph file format")
    common.add_argument("-v", "--verbose", action="count", default=0, help="log more (repeatable)")

    parser = argparse.ArgumentParser(prog="homdensity", description="Exact graph homomorphism densities.")
    parser.add_argument("--version", action="version", version="%(prog)s {}".format(__version__))
    subparsers = parser.add_subparsers(dest="command")
    subparsers.required = True

    count = subparsers.add_parser("count", parents=[common], help="count mappings and homomorphisms")
    count.add_argument("domain")
    count.add_argument("codomain")
    count.set_defaults(handler=cmd_count)

    verify = subparsers.add_parser("verify", parents=[common], help="run property suites over a random corpus")
    verify.add_argument("selector", choices=SELECTORS)
    _add_corpus_arguments(verify)
    verify.set_defaults(handler=cmd_verify)

    bench = subparsers.add_parser("bench", parents=[common], help="compare the oracle with the engine")
    bench.add_argument("domain")
    bench.add_argument("codomain")
    bench.add_argument("repetitions", type=int, nargs="?", default=5)
    bench.set_defaults(handler=cmd_bench)

    gen = subparsers.add_parser("gen", parents=[common], help="write a seeded corpus as graph6 lines")
    gen.add_argument("output", help="output path, or - for standard output")
    _add_corpus_arguments(gen)
    gen.set_defaults(handler=cmd_gen)

    return parser


def configure_logging(verbosity):
    logging.basicConfig(
        level=LOG_LEVELS.get(verbosity, logging.DEBUG),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def main(argv=None):
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)

    try:
        return args.handler(args)
    except tuple(exception for exception, _ in EXIT_CODES) as exception:
        print("error: {}".format(exception), file=sys.stderr)
        return next(code for exception_class, code in EXIT_CODES if isinstance(exception, exception_class))
