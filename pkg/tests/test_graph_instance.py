"""Tests for ordered graphs, instances and colorings."""

import unittest

from ordered_coloring.core.graph import (
    build_graph,
    complete_graph,
    cycle_graph,
    induced,
    reverse,
)
from ordered_coloring.core.instance import Coloring, Instance, is_proper, make_instance
from ordered_coloring.errors import GraphError


class TestOrderedGraph(unittest.TestCase):
    """Test OrderedGraph construction and queries."""

    def setUp(self):
        """Set up test fixtures."""
        self.path = build_graph(4, [(0, 1), (1, 2), (2, 3)])

    def test_edges_sorted(self):
        """Test edges come out normalized and lexicographic."""
        g = build_graph(3, [(2, 0), (1, 0), (0, 2)])
        self.assertEqual(g.edges(), [(0, 1), (0, 2)])
        self.assertEqual(g.num_edges, 2)

    def test_forward_backward_neighbors(self):
        """Test N+ and N- split the neighborhood by order."""
        self.assertEqual(self.path.forward_neighbors(1), frozenset({2}))
        self.assertEqual(self.path.backward_neighbors(1), frozenset({0}))
        self.assertEqual(self.path.forward_neighbors(3), frozenset())

    def test_self_loop_rejected(self):
        """Test self-loops raise GraphError."""
        with self.assertRaises(GraphError):
            build_graph(2, [(1, 1)])

    def test_out_of_range_rejected(self):
        """Test out-of-range endpoints raise GraphError."""
        with self.assertRaises(GraphError):
            build_graph(2, [(0, 2)])
        with self.assertRaises(GraphError):
            self.path.forward_neighbors(7)

    def test_induced_keeps_order(self):
        """Test induced subgraphs relabel in increasing order."""
        sub = induced(self.path, [1, 2, 3])
        self.assertEqual(sub.edges(), [(0, 1), (1, 2)])
        with self.assertRaises(GraphError):
            induced(self.path, [2, 1])

    def test_reverse(self):
        """Test reversing maps vertex i to n-1-i."""
        g = build_graph(3, [(0, 1)])
        self.assertEqual(reverse(g).edges(), [(1, 2)])

    def test_complete_and_cycle(self):
        """Test the named graph helpers."""
        self.assertTrue(complete_graph(4).is_complete())
        self.assertEqual(cycle_graph(5).num_edges, 5)
        self.assertEqual(cycle_graph(2).num_edges, 0)

    def test_independent_and_clique(self):
        """Test independence and clique checks."""
        self.assertTrue(self.path.is_independent([0, 2]))
        self.assertFalse(self.path.is_independent([0, 1]))
        self.assertTrue(complete_graph(3).is_clique([0, 1, 2]))


class TestInstance(unittest.TestCase):
    """Test list instances and proper colorings."""

    def setUp(self):
        """Set up test fixtures."""
        self.inst = make_instance(3, [(0, 1), (1, 2)], [[1, 2], [2], [1, 3]], k=3)

    def test_palette_and_sizes(self):
        """Test palette and maximum list size."""
        self.assertEqual(self.inst.palette(), [1, 2, 3])
        self.assertEqual(self.inst.max_list_size(), 2)

    def test_list_count_mismatch(self):
        """Test a wrong number of lists raises GraphError."""
        with self.assertRaises(GraphError):
            Instance(build_graph(2, []), (frozenset({1}),))

    def test_color_beyond_k(self):
        """Test colors above k raise GraphError."""
        with self.assertRaises(GraphError):
            make_instance(1, [], [[4]], k=3)

    def test_is_proper(self):
        """Test proper and improper colorings."""
        self.assertTrue(is_proper(self.inst, Coloring((1, 2, 1))))
        self.assertFalse(is_proper(self.inst, Coloring((2, 2, 1))))
        self.assertFalse(is_proper(self.inst, Coloring((1, 2, 2))))

    def test_is_proper_length(self):
        """Test a coloring of the wrong length raises GraphError."""
        with self.assertRaises(GraphError):
            is_proper(self.inst, Coloring((1, 2)))

    def test_pinned(self):
        """Test pinning intersects lists."""
        pinned = self.inst.pinned({0: 2, 2: 2})
        self.assertEqual(pinned.lists[0], frozenset({2}))
        self.assertEqual(pinned.lists[2], frozenset())

    def test_to_dict(self):
        """Test the serializable form."""
        doc = self.inst.to_dict()
        self.assertEqual(doc["n"], 3)
        self.assertEqual(doc["edges"], [[0, 1], [1, 2]])
        self.assertEqual(doc["lists"], [[1, 2], [2], [1, 3]])


if __name__ == "__main__":
    unittest.main()
