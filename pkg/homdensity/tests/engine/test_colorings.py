from unittest import TestCase

from hypothesis import given, strategies as st

from homdensity.engine import count_proper_colorings
from homdensity.graph import Graph, complete, cycle, path
from homdensity.tests.engine.oracles import chromatic_value
from homdensity.tests.mocks import PROPERTY_SETTINGS, double_star, graphs


class CountProperColoringsTests(TestCase):
    def test_path_with_three_colors(self):
        self.assertEqual(12, count_proper_colorings(path(3), 3))

    def test_tree_with_six_colors(self):
        self.assertEqual(18750, count_proper_colorings(double_star, 6))

    def test_even_cycle(self):
        self.assertEqual(2, count_proper_colorings(cycle(4), 2))
        self.assertEqual(18, count_proper_colorings(cycle(4), 3))

    def test_too_few_colors(self):
        self.assertEqual(0, count_proper_colorings(complete(4), 3))
        self.assertEqual(0, count_proper_colorings(cycle(5), 2))

    def test_no_colors(self):
        self.assertEqual(1, count_proper_colorings(Graph(0), 0))
        self.assertEqual(0, count_proper_colorings(Graph(1), 0))

    @PROPERTY_SETTINGS
    @given(graphs(max_n=6), st.integers(min_value=0, max_value=5))
    def test_agrees_with_deletion_contraction(self, g, m):
        self.assertEqual(chromatic_value(g, m), count_proper_colorings(g, m))
