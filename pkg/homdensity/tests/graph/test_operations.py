from unittest import TestCase

from hypothesis import given

from homdensity.exceptions import VertexOutOfRange
from homdensity.graph import (
    DegreeInfo,
    Graph,
    add_edge,
    add_isolated,
    complement,
    complete,
    cycle,
    degree,
    degrees,
    edgeless,
    is_complete,
    is_edgeless,
    isolated_vertices,
    path,
    strip_isolated,
)
from homdensity.tests.mocks import PROPERTY_SETTINGS, graphs


class ComplementTests(TestCase):
    def test_complement_of_complete_is_edgeless(self):
        self.assertEqual(edgeless(4), complement(complete(4)))

    def test_complement_of_path(self):
        self.assertEqual(Graph(3, [(0, 2)]), complement(path(3)))

    def test_complement_of_empty_graph(self):
        self.assertEqual(Graph(0), complement(Graph(0)))

    @PROPERTY_SETTINGS
    @given(graphs(max_n=7))
    def test_complement_is_an_involution(self, g):
        self.assertEqual(g, complement(complement(g)))

    @PROPERTY_SETTINGS
    @given(graphs(max_n=7))
    def test_edge_counts_add_up_to_complete(self, g):
        self.assertEqual(g.n * (g.n - 1) // 2, g.edge_count + complement(g).edge_count)


class DegreeTests(TestCase):
    def test_degree(self):
        self.assertEqual(4, degree(complete(5), 2))
        self.assertEqual(1, degree(path(4), 0))
        self.assertEqual(2, degree(path(4), 1))
        self.assertEqual(0, degree(edgeless(3), 1))

    def test_degree_out_of_range_raises(self):
        with self.assertRaises(VertexOutOfRange):
            degree(path(3), 3)

    def test_degrees(self):
        self.assertEqual(
            [DegreeInfo(0, 1), DegreeInfo(1, 2), DegreeInfo(2, 1)],
            degrees(path(3)),
        )

    @PROPERTY_SETTINGS
    @given(graphs(max_n=8))
    def test_degree_sum_is_twice_the_edge_count(self, g):
        self.assertEqual(2 * g.edge_count, sum(info.degree for info in degrees(g)))


class PredicateTests(TestCase):
    def test_is_edgeless(self):
        self.assertTrue(is_edgeless(edgeless(7)))
        self.assertTrue(is_edgeless(complete(1)))
        self.assertTrue(is_edgeless(Graph(0)))
        self.assertFalse(is_edgeless(cycle(3)))

    def test_is_complete(self):
        self.assertTrue(is_complete(complete(4)))
        self.assertTrue(is_complete(Graph(0)))
        self.assertTrue(is_complete(Graph(1)))
        self.assertFalse(is_complete(path(3)))
        self.assertFalse(is_complete(edgeless(2)))

    def test_isolated_vertices(self):
        self.assertEqual([0, 2], isolated_vertices(Graph(5, [(1, 3), (3, 4)])))
        self.assertEqual([], isolated_vertices(cycle(4)))


class StripIsolatedTests(TestCase):
    def test_isolated_vertex_is_removed(self):
        self.assertEqual((complete(3), 1), strip_isolated(Graph(4, [(0, 1), (0, 2), (1, 2)])))

    def test_edgeless_graph_strips_to_nothing(self):
        self.assertEqual((Graph(0), 4), strip_isolated(edgeless(4)))

    def test_graph_without_isolated_vertices_is_unchanged(self):
        g = cycle(5)

        stripped, k = strip_isolated(g)

        self.assertIs(g, stripped)
        self.assertEqual(0, k)

    def test_relabeling_keeps_relative_order(self):
        self.assertEqual((path(3), 2), strip_isolated(Graph(5, [(1, 3), (3, 4)])))

    @PROPERTY_SETTINGS
    @given(graphs(max_n=8))
    def test_strip_is_idempotent(self, g):
        stripped, k = strip_isolated(g)

        self.assertEqual((stripped, 0), strip_isolated(stripped))
        self.assertEqual(g.n, stripped.n + k)
        self.assertEqual(g.edge_count, stripped.edge_count)


class GrowTests(TestCase):
    def test_add_isolated(self):
        self.assertEqual(Graph(4, [(0, 1), (0, 2), (1, 2)]), add_isolated(complete(3)))
        self.assertEqual(edgeless(3), add_isolated(Graph(0), 3))

    def test_add_edge(self):
        self.assertEqual(cycle(4), add_edge(path(4), 3, 0))
