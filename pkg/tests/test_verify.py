"""Tests for exhaustive link verification."""

import unittest

from ordered_coloring.core.graph import build_graph
from ordered_coloring.core.instance import Instance
from ordered_coloring.errors import GraphError
from ordered_coloring.gadgets import (
    Link,
    identity_expectation,
    identity_link,
    permutation_expectation,
    rotation_gadget,
    verify_link_semantics,
)
from ordered_coloring.gadgets.links import WIRE


class TestVerifyLinkSemantics(unittest.TestCase):
    """Test the pinning enumeration and its report."""

    def setUp(self):
        """Set up test fixtures."""
        self.swap = rotation_gadget(2, 1, 2)

    def test_wrong_expectation_is_reported(self):
        """Test the swap gadget is not the identity."""
        report = verify_link_semantics(self.swap, identity_expectation(), name="swap-as-identity")
        self.assertFalse(report.passed)
        self.assertEqual(len(report.mismatches), 2)
        self.assertEqual({r.inputs for r in report.mismatches}, {(1, 2), (2, 1)})

    def test_broken_gadget_is_reported(self):
        """Test deleting a wire edge breaks the swap."""
        inst = self.swap.instance
        broken = Link(inst.with_graph(inst.graph.without_edges([(0, 2)])), 2, 2)
        report = verify_link_semantics(broken, permutation_expectation((2, 1)))
        self.assertFalse(report.passed)

    def test_report_document(self):
        """Test the serializable report."""
        report = verify_link_semantics(identity_link(1), identity_expectation(), name="wire")
        doc = report.to_dict()
        self.assertEqual(doc["name"], "wire")
        self.assertTrue(doc["passed"])
        self.assertEqual([row["inputs"] for row in doc["pinnings"]], ["1", "2"])
        self.assertEqual(doc["pinnings"][0]["outputs"], "1")

    def test_threads(self):
        """Test pooled verification gives the same rows."""
        serial = verify_link_semantics(self.swap, permutation_expectation((2, 1)))
        pooled = verify_link_semantics(self.swap, permutation_expectation((2, 1)), threads=4)
        self.assertEqual(serial.results, pooled.results)

    def test_infeasible_link(self):
        """Test a link with no coloring fails every pinning expected feasible."""
        inst = Instance(build_graph(3, [(0, 1), (1, 2)]), (WIRE, frozenset(), WIRE))
        dead = Link(inst, 1, 1)
        report = verify_link_semantics(dead, identity_expectation())
        self.assertEqual(len(report.mismatches), 2)
        self.assertTrue(all(r.feasible is False for r in report.results))

    def test_too_many_inputs(self):
        """Test enumeration refuses very wide links."""
        with self.assertRaises(GraphError):
            verify_link_semantics(identity_link(13), identity_expectation())


if __name__ == "__main__":
    unittest.main()
