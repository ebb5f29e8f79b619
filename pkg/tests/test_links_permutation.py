"""Tests for links, chaining, rotation and permutation gadgets."""

import unittest
from itertools import combinations, permutations

from ordered_coloring.core.graph import build_graph
from ordered_coloring.core.instance import Instance
from ordered_coloring.core.patterns import is_free, nested_pair
from ordered_coloring.errors import GraphError
from ordered_coloring.gadgets import (
    Link,
    Rotation,
    chain,
    compose,
    decompose_rotations,
    identity_expectation,
    identity_link,
    inverse,
    permutation_expectation,
    permutation_gadget,
    rotation_gadget,
    verify_link_semantics,
)
from ordered_coloring.gadgets.links import WIRE
from ordered_coloring.gadgets.permutation import check_permutation


class TestLink(unittest.TestCase):
    """Test the link data model."""

    def test_identity_link(self):
        """Test the plain wire link."""
        link = identity_link(2)
        self.assertEqual(link.n, 6)
        self.assertEqual(list(link.inputs), [0, 1])
        self.assertEqual(list(link.outputs), [4, 5])

    def test_terminal_lists(self):
        """Test terminals must carry {1, 2}."""
        inst = Instance(build_graph(2, []), (WIRE, frozenset({3})))
        with self.assertRaises(GraphError):
            Link(inst, 1, 1)

    def test_overlapping_terminals(self):
        """Test inputs and outputs must be disjoint."""
        inst = Instance(build_graph(1, []), (WIRE,))
        with self.assertRaises(GraphError):
            Link(inst, 1, 1)

    def test_dependent_inputs(self):
        """Test adjacent inputs are rejected."""
        inst = Instance(build_graph(4, [(0, 1)]), (WIRE,) * 4)
        with self.assertRaises(GraphError):
            Link(inst, 2, 2)

    def test_chain_arity_mismatch(self):
        """Test chaining requires matching arities."""
        with self.assertRaises(GraphError):
            chain(identity_link(2), identity_link(3))

    def test_chain_shares_wires(self):
        """Test chained links share the output and input vertices."""
        joined = chain(identity_link(2), identity_link(2))
        self.assertEqual(joined.n, 10)
        self.assertEqual(joined.in_arity, 2)
        self.assertTrue(joined.instance.graph.has_edge(4, 6))

    def test_pin(self):
        """Test pinning restricts the input lists."""
        inst = identity_link(2).pin((2, 1))
        self.assertEqual(inst.lists[0], frozenset({2}))
        with self.assertRaises(GraphError):
            identity_link(2).pin((1,))


class TestPermutations(unittest.TestCase):
    """Test permutation algebra and rotation decomposition."""

    def test_compose_inverse(self):
        """Test composing with the inverse gives the identity."""
        sigma = (3, 1, 4, 2)
        self.assertEqual(compose(sigma, inverse(sigma)), (1, 2, 3, 4))
        self.assertEqual(compose(inverse(sigma), sigma), (1, 2, 3, 4))

    def test_rotation_map(self):
        """Test a rotation shifts j..k cyclically."""
        self.assertEqual(Rotation(4, 2, 4).as_permutation(), (1, 3, 4, 2))
        self.assertTrue(Rotation(3, 2, 2).is_identity)
        with self.assertRaises(GraphError):
            Rotation(3, 3, 2)

    def test_decompose_identity(self):
        """Test the identity decomposes into identity rotations."""
        self.assertEqual(decompose_rotations((1, 2, 3)), [Rotation(3, 1, 1), Rotation(3, 2, 2)])

    def test_decompose_recomposes(self):
        """Test the rotations compose back to sigma for all permutations of four."""
        for sigma in permutations(range(1, 5)):
            done = (1, 2, 3, 4)
            for rot in decompose_rotations(sigma):
                done = compose(rot.as_permutation(), done)
            self.assertEqual(done, sigma)

    def test_bad_permutation(self):
        """Test non-permutations are rejected."""
        with self.assertRaises(GraphError):
            check_permutation((1, 1, 2))


class TestRotationGadget(unittest.TestCase):
    """Test rotation and permutation gadgets."""

    def test_size(self):
        """Test the five layers hold 5*ell + 2 vertices."""
        for ell, j, k in [(2, 1, 2), (3, 1, 3), (4, 2, 3)]:
            link = rotation_gadget(ell, j, k)
            self.assertEqual(link.n, 5 * ell + 2)
            self.assertTrue(is_free(link.instance.graph, nested_pair()))

    def test_identity_rejected(self):
        """Test j == k has no rotation gadget."""
        with self.assertRaises(GraphError):
            rotation_gadget(3, 2, 2)

    def test_swap_semantics(self):
        """Test the two-wire rotation swaps its inputs."""
        report = verify_link_semantics(rotation_gadget(2, 1, 2), permutation_expectation((2, 1)))
        self.assertTrue(report.passed)
        self.assertEqual(len(report.results), 4)

    def test_rotation_semantics(self):
        """Test every rotation on three wires."""
        for j, k in [(1, 2), (1, 3), (2, 3)]:
            sigma = Rotation(3, j, k).as_permutation()
            report = verify_link_semantics(rotation_gadget(3, j, k), permutation_expectation(sigma))
            self.assertTrue(report.passed, f"rotation <3;{j},{k}>")

    def test_permutation_semantics(self):
        """Test a permutation gadget built from several rotations."""
        sigma = (3, 1, 2)
        link = permutation_gadget(sigma)
        self.assertTrue(is_free(link.instance.graph, nested_pair()))
        self.assertTrue(verify_link_semantics(link, permutation_expectation(sigma)).passed)

    def test_identity_permutation(self):
        """Test the identity permutation is a chain of plain wires."""
        link = permutation_gadget((1, 2, 3))
        self.assertEqual(link.n, 15)
        self.assertTrue(verify_link_semantics(link, identity_expectation()).passed)

    def test_single_wire(self):
        """Test a one-wire permutation."""
        self.assertEqual(permutation_gadget((1,)).n, 3)

    def test_all_rotations_up_to_four_wires(self):
        """Test size, freeness and semantics of every rotation on at most four wires."""
        for ell in range(2, 5):
            for j, k in combinations(range(1, ell + 1), 2):
                link = rotation_gadget(ell, j, k)
                self.assertEqual(link.n, 5 * ell + 2)
                self.assertTrue(is_free(link.instance.graph, nested_pair()))
                sigma = Rotation(ell, j, k).as_permutation()
                report = verify_link_semantics(link, permutation_expectation(sigma))
                self.assertTrue(report.passed, f"rotation <{ell};{j},{k}>")

    def test_all_permutations_up_to_four_wires(self):
        """Test every permutation of at most four wires routes inputs to their images."""
        for ell in range(1, 5):
            for sigma in permutations(range(1, ell + 1)):
                link = permutation_gadget(sigma)
                self.assertEqual((link.in_arity, link.out_arity), (ell, ell))
                self.assertTrue(is_free(link.instance.graph, nested_pair()))
                report = verify_link_semantics(link, permutation_expectation(sigma))
                self.assertTrue(report.passed, f"permutation {sigma}")



if __name__ == "__main__":
    unittest.main()
