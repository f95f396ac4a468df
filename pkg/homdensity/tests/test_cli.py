import json
import os
import tempfile
from io import StringIO
from unittest import TestCase
from unittest.mock import patch

from homdensity.cli import (
    EXIT_BUDGET_EXCEEDED,
    EXIT_OK,
    EXIT_PARSE_ERROR,
    EXIT_UNDEFINED_DENSITY,
    EXIT_VIOLATION,
    main,
    resolve_graph,
)
from homdensity.engine import FastPath, SearchStats
from homdensity.exceptions import GraphFormatException, InvalidOrder
from homdensity.graph import complete, cycle, edgeless, path
from homdensity.io import parse_graph6, write_edge_list, write_graph6
from homdensity.tests.mocks import double_star, triangle_with_pendants


def inflated_count(g, f, counter=None):
    return f.n ** g.n, SearchStats(0, 0, FastPath.none, 0.0)


class CommandLineTestCase(TestCase):
    def setUp(self):
        self.paths = []

    def tearDown(self):
        for path_ in self.paths:
            if os.path.exists(path_):
                os.unlink(path_)

    def temp_path(self, suffix, data=None):
        with tempfile.NamedTemporaryFile(suffix=suffix, delete=False) as fp:
            if data is not None:
                fp.write(data)
        self.paths.append(fp.name)
        return fp.name

    def run_cli(self, *argv):
        with patch("sys.stdout", new_callable=StringIO) as stdout, patch("sys.stderr", new_callable=StringIO) as stderr:
            code = main(list(argv))
        return code, stdout.getvalue(), stderr.getvalue()

    def run_json(self, *argv):
        code, out, _ = self.run_cli(*argv, "--json")
        return code, json.loads(out)


class ResolveGraphTests(CommandLineTestCase):
    def test_family_specifiers(self):
        self.assertEqual(complete(4), resolve_graph("K4"))
        self.assertEqual(path(3), resolve_graph("P3"))
        self.assertEqual(cycle(6), resolve_graph("C6"))
        self.assertEqual(edgeless(5), resolve_graph("E5"))

    def test_invalid_family_order(self):
        with self.assertRaises(InvalidOrder):
            resolve_graph("C2")

    def test_first_graph_of_a_file(self):
        name = self.temp_path(".g6", b"Bw\nCh\n")

        self.assertEqual(complete(3), resolve_graph(name))

    def test_empty_file_raises(self):
        name = self.temp_path(".g6", b"\n")

        with self.assertRaises(GraphFormatException):
            resolve_graph(name)


class CountCommandTests(CommandLineTestCase):
    def test_complete_into_complete(self):
        code, record = self.run_json("count", "K4", "K5")

        self.assertEqual(EXIT_OK, code)
        self.assertEqual("625", record["mappings"])
        self.assertEqual("120", record["injective"])
        self.assertEqual("120", record["homomorphisms"])
        self.assertEqual({"num": "24", "den": "125"}, record["density"])
        self.assertEqual("complete_domain", record["fast_path"])

    def test_no_homomorphisms(self):
        code, record = self.run_json("count", "K4", "P3")

        self.assertEqual(EXIT_OK, code)
        self.assertEqual("0", record["homomorphisms"])
        self.assertEqual({"num": "0", "den": "1"}, record["density"])

    def test_edgeless_domain(self):
        _, record = self.run_json("count", "E3", "C6")

        self.assertEqual({"num": "1", "den": "1"}, record["density"])

    def test_graph_files(self):
        codomain = self.temp_path(".el", write_edge_list(triangle_with_pendants).encode())
        _, record = self.run_json("count", "K3", codomain)

        self.assertEqual(("216", "120", "6"), (record["mappings"], record["injective"], record["homomorphisms"]))
        self.assertEqual({"num": "1", "den": "36"}, record["density"])

        domain = self.temp_path(".g6", write_graph6(double_star) + b"\n")
        _, record = self.run_json("count", domain, "K6")

        self.assertEqual(("46656", "720", "18750"), (record["mappings"], record["injective"], record["homomorphisms"]))
        self.assertEqual({"num": "3125", "den": "7776"}, record["density"])

    def test_forced_format(self):
        domain = self.temp_path(".txt", b"Bw\n")
        _, record = self.run_json("count", domain, "K3", "--format", "g6")

        self.assertEqual("6", record["homomorphisms"])

    def test_table_output(self):
        code, out, _ = self.run_cli("count", "K4", "K5")

        self.assertEqual(EXIT_OK, code)
        self.assertIn("24/125", out)
        self.assertIn("complete_domain", out)

    def test_csv_output(self):
        code, out, _ = self.run_cli("count", "K4", "K5", "--csv")

        header, row = out.strip().splitlines()
        self.assertEqual(
            "domain,codomain,mappings,injective,homomorphisms,density,fast_path,elapsed", header
        )
        self.assertTrue(row.startswith("K4,K5,625,120,120,24/125,complete_domain,"))

    def test_naive_counting(self):
        _, record = self.run_json("count", "P4", "C6", "--naive")

        self.assertEqual("48", record["homomorphisms"])
        self.assertEqual("naive", record["fast_path"])

    def test_threads(self):
        _, record = self.run_json("count", "P4", "C6", "--threads", "3")

        self.assertEqual("48", record["homomorphisms"])

    def test_empty_codomain(self):
        code, _, err = self.run_cli("count", "K1", "E0")

        self.assertEqual(EXIT_UNDEFINED_DENSITY, code)
        self.assertIn("error:", err)

    def test_budget_exceeded(self):
        code, _, _ = self.run_cli("count", "K3", "K3", "--naive", "--budget", "10")

        self.assertEqual(EXIT_BUDGET_EXCEEDED, code)

    def test_malformed_graph6(self):
        name = self.temp_path(".g6", b"Bww\n")
        code, _, err = self.run_cli("count", name, "K3")

        self.assertEqual(EXIT_PARSE_ERROR, code)
        self.assertIn("line 1, byte 2", err)

    def test_malformed_edge_list(self):
        name = self.temp_path(".el", b"2\n0 0\n")

        self.assertEqual(EXIT_PARSE_ERROR, self.run_cli("count", name, "K3")[0])

    def test_missing_file(self):
        self.assertEqual(EXIT_PARSE_ERROR, self.run_cli("count", "/nonexistent/graph.g6", "K3")[0])

    def test_unknown_extension(self):
        name = self.temp_path(".txt", b"Bw\n")

        self.assertEqual(EXIT_PARSE_ERROR, self.run_cli("count", name, "K3")[0])

    def test_invalid_family_order(self):
        self.assertEqual(EXIT_PARSE_ERROR, self.run_cli("count", "C2", "K3")[0])


class VerifyCommandTests(CommandLineTestCase):
    def test_closed_form(self):
        code, records = self.run_json("verify", "complete-closed-form", "--n-max", "5")

        self.assertEqual(EXIT_OK, code)
        self.assertEqual(
            [{"suite": "complete-closed-form", "checked": "25", "passed": "25", "failed": "0", "skipped": "0",
              "failures": []}],
            records,
        )

    def test_sampled_suite(self):
        code, out, _ = self.run_cli("verify", "isolated-invariance", "--n-max", "4", "--samples", "50", "--seed", "7")

        self.assertEqual(EXIT_OK, code)
        self.assertIn("isolated-invariance", out)
        self.assertNotIn("FAIL", out)

    def test_numbered_selector(self):
        code, out, _ = self.run_cli("verify", "thm2.6", "--n-max", "4", "--samples", "50", "--seed", "7")

        self.assertEqual(EXIT_OK, code)
        self.assertIn("isolated-invariance", out)
        self.assertNotIn("FAIL", out)

    def test_numbered_closed_form_selector(self):
        code, records = self.run_json("verify", "cor2.5.1", "--n-max", "5")

        self.assertEqual(EXIT_OK, code)
        self.assertEqual(1, len(records))
        self.assertEqual("complete-closed-form", records[0]["suite"])
        self.assertEqual(25, int(records[0]["passed"]))

    def test_all_suites(self):
        code, records = self.run_json("verify", "all", "--n-max", "4", "--samples", "30")

        self.assertEqual(EXIT_OK, code)
        self.assertEqual(7, len(records))

    @patch("homdensity.density.core.count_homomorphisms", side_effect=inflated_count)
    def test_inflated_counts_are_reported(self, mock_count):
        code, out, _ = self.run_cli("verify", "edgeless-iff-one", "--n-max", "5")

        self.assertEqual(EXIT_VIOLATION, code)
        self.assertIn("FAIL edgeless-iff-one: domain=", out)
        self.assertIn("witness=[0", out)

    @patch("homdensity.density.core.count_homomorphisms", side_effect=inflated_count)
    def test_inflated_counts_in_json(self, mock_count):
        code, records = self.run_json("verify", "edgeless-iff-one", "--n-max", "5")

        self.assertEqual(EXIT_VIOLATION, code)
        self.assertTrue(records[0]["failures"])

    def test_budget_exceeded(self):
        code, _, _ = self.run_cli("verify", "clique-injective", "--n-min", "3", "--budget", "1", "--samples", "5")

        self.assertEqual(EXIT_BUDGET_EXCEEDED, code)

    def test_invalid_corpus(self):
        self.assertEqual(EXIT_PARSE_ERROR, self.run_cli("verify", "all", "--n-min", "5", "--n-max", "2")[0])

    def test_unknown_selector_is_a_usage_error(self):
        with self.assertRaises(SystemExit) as context:
            self.run_cli("verify", "no-such-suite")

        self.assertEqual(2, context.exception.code)


class BenchCommandTests(CommandLineTestCase):
    def test_complete_into_complete(self):
        code, rows = self.run_json("bench", "K4", "K6", "5")

        self.assertEqual(EXIT_OK, code)
        self.assertEqual(["naive", "engine", "backtracking"], [row["method"] for row in rows])
        self.assertEqual(["360"] * 3, [row["homomorphisms"] for row in rows])

    def test_edgeless_domain(self):
        _, rows = self.run_json("bench", "E6", "K3", "2")

        self.assertEqual("729", rows[1]["homomorphisms"])
        self.assertEqual("edgeless_domain", rows[1]["fast_path"])

    def test_default_repetitions(self):
        code, out, _ = self.run_cli("bench", "P4", "C6")

        self.assertEqual(EXIT_OK, code)
        self.assertIn("mean_seconds", out)

    @patch("homdensity.reports.count_homomorphisms", side_effect=lambda g, f, counter=None: inflated_count(g, f))
    def test_mismatch(self, mock_count):
        code, _, err = self.run_cli("bench", "P4", "C6", "1")

        self.assertEqual(EXIT_VIOLATION, code)
        self.assertIn("disagree", err)

    def test_budget_exceeded(self):
        self.assertEqual(EXIT_BUDGET_EXCEEDED, self.run_cli("bench", "K5", "K6", "1", "--budget", "100")[0])


class GenCommandTests(CommandLineTestCase):
    def test_dense_corpus(self):
        output = self.temp_path(".g6")

        code, _, _ = self.run_cli("gen", output, "--seed", "1", "--n-min", "3", "--n-max", "3", "--p", "1",
                                "--samples", "1")

        self.assertEqual(EXIT_OK, code)
        with open(output, "rb") as fp:
            self.assertEqual(b"Bw\n", fp.read())

    def test_empty_corpus_probability(self):
        output = self.temp_path(".g6")

        self.run_cli("gen", output, "--n-min", "4", "--n-max", "4", "--p", "0", "--samples", "2")

        with open(output, "rb") as fp:
            self.assertEqual(b"C?\nC?\n", fp.read())

    def test_same_seed_gives_the_same_bytes(self):
        first, second = self.temp_path(".g6"), self.temp_path(".g6")

        for output in (first, second):
            self.run_cli("gen", output, "--seed", "9", "--n-max", "8", "--p", "1/3", "--samples", "40")

        with open(first, "rb") as fp_first, open(second, "rb") as fp_second:
            data = fp_first.read()
            self.assertEqual(data, fp_second.read())

        lines = data.splitlines()
        self.assertEqual(40, len(lines))
        for line in lines:
            self.assertIn(parse_graph6(line).n, range(1, 9))

    def test_invalid_probability(self):
        output = self.temp_path(".g6")

        self.assertEqual(EXIT_PARSE_ERROR, self.run_cli("gen", output, "--p", "3/2")[0])
