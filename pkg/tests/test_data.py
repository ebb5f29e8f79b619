"""Tests for generators and instance documents."""

import tempfile
import unittest
from pathlib import Path

import numpy as np

from ordered_coloring.core.instance import Coloring, make_instance
from ordered_coloring.core.patterns import find_induced, fork, padded_edge
from ordered_coloring.data.generators import (
    make_rng,
    random_cnf3,
    random_graph,
    random_instance,
    random_lists,
    random_nae,
)
from ordered_coloring.data.instance_io import (
    coloring_from_dict,
    decode_map_from_dict,
    instance_from_dict,
    instance_to_dict,
    load_instance,
    save_instance,
)
from ordered_coloring.errors import FormatError, GraphError
from ordered_coloring.gadgets import NaeDecodeMap


class TestGenerators(unittest.TestCase):
    """Test seeded random generation."""

    def test_seeded_graphs_repeat(self):
        """Test the same seed gives the same graph."""
        self.assertEqual(random_graph(10, 0.4, seed=5), random_graph(10, 0.4, seed=5))

    def test_generator_passthrough(self):
        """Test an existing generator is reused."""
        rng = np.random.default_rng(0)
        self.assertIs(make_rng(rng), rng)

    def test_random_lists(self):
        """Test list sizes and palette bounds."""
        lists = random_lists(20, 5, seed=1, max_size=2)
        self.assertTrue(all(1 <= len(lst) <= 2 for lst in lists))
        self.assertTrue(all(1 <= c <= 5 for lst in lists for c in lst))

    def test_pattern_free_instances(self):
        """Test repaired instances exclude the requested patterns."""
        inst = random_instance(10, 3, 0.6, seed=2, patterns=[fork(), padded_edge(1)])
        self.assertIsNone(find_induced(inst.graph, fork()))
        self.assertIsNone(find_induced(inst.graph, padded_edge(1)))
        self.assertEqual(inst.k, 3)

    def test_random_cnf3(self):
        """Test clauses use three distinct variables."""
        f = random_cnf3(6, 10, seed=4)
        self.assertEqual(len(f.clauses), 10)
        self.assertTrue(all(len({abs(x) for x in c}) == 3 for c in f.clauses))
        with self.assertRaises(ValueError):
            random_cnf3(2, 1)

    def test_random_nae_occurrence_cap(self):
        """Test no variable exceeds the occurrence cap."""
        f = random_nae(6, 20, seed=3)
        self.assertTrue(all(count <= 4 for count in f.occurrences().values()))
        self.assertLessEqual(len(f.clauses), 8)


class TestInstanceDocuments(unittest.TestCase):
    """Test instance and coloring documents."""

    def setUp(self):
        """Set up test fixtures."""
        self.temp_dir = tempfile.TemporaryDirectory()
        self.inst = make_instance(3, [(0, 2)], [[1, 2], [3], [2]], k=3)

    def tearDown(self):
        """Clean up temp directory."""
        self.temp_dir.cleanup()

    def test_document_fields(self):
        """Test the format id and k are written."""
        doc = instance_to_dict(self.inst)
        self.assertEqual(list(doc)[0], "format")
        self.assertEqual(doc["k"], 3)

    def test_file_round_trip(self):
        """Test saving and loading an instance file."""
        path = str(Path(self.temp_dir.name) / "sub" / "inst.json")
        save_instance(self.inst, path)
        self.assertEqual(load_instance(path), self.inst)

    def test_missing_format_accepted(self):
        """Test documents without a format id."""
        inst = instance_from_dict({"n": 1, "lists": [[1]]})
        self.assertEqual(inst.n, 1)

    def test_wrong_format(self):
        """Test foreign documents are rejected."""
        with self.assertRaises(FormatError):
            instance_from_dict({"format": "other", "n": 1, "lists": [[1]]})
        with self.assertRaises(FormatError):
            instance_from_dict({"n": 1})

    def test_graph_errors_pass_through(self):
        """Test invalid graphs keep their error type."""
        with self.assertRaises(GraphError):
            instance_from_dict({"n": 2, "edges": [[0, 5]], "lists": [[1], [1]]})

    def test_colorings(self):
        """Test sat and unsat coloring documents."""
        self.assertEqual(coloring_from_dict({"status": "sat", "colors": [1, 2]}), Coloring((1, 2)))
        self.assertIsNone(coloring_from_dict({"status": "unsat"}))
        with self.assertRaises(FormatError):
            coloring_from_dict({"status": "maybe"})

    def test_decode_maps(self):
        """Test decode maps are chosen by format id."""
        doc = NaeDecodeMap((0, 1)).to_dict()
        self.assertEqual(decode_map_from_dict(doc), NaeDecodeMap((0, 1)))
        with self.assertRaises(FormatError):
            decode_map_from_dict({"format": "unknown"})


if __name__ == "__main__":
    unittest.main()
