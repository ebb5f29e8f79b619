"""Tests for configuration, the solver engine and reporting."""

import json
import tempfile
import unittest
from pathlib import Path

import pandas as pd

from ordered_coloring.config.solver_config import SolverConfig
from ordered_coloring.core.graph import complete_graph
from ordered_coloring.core.instance import Instance, make_instance
from ordered_coloring.engine.solver_engine import GADGET_KINDS, SolverEngine, parse_gadget_params
from ordered_coloring.errors import PreconditionError
from ordered_coloring.report.report_generator import ReportGenerator


class TestSolverConfig(unittest.TestCase):
    """Test SolverConfig functionality."""

    def setUp(self):
        """Set up test fixtures."""
        self.temp_dir = tempfile.TemporaryDirectory()
        self.config = SolverConfig(algo="ljj4", ell=2, threads=2)

    def tearDown(self):
        """Clean up temp directory."""
        self.temp_dir.cleanup()

    def test_defaults(self):
        """Test default values."""
        config = SolverConfig()
        self.assertEqual(config.algo, "auto")
        self.assertEqual(config.ell, 1)
        self.assertTrue(config.validate_config())

    def test_yaml_round_trip(self):
        """Test saving and loading YAML."""
        path = Path(self.temp_dir.name) / "solver.yaml"
        self.config.save_to_file(str(path))
        loaded = SolverConfig()
        loaded.load_from_file(str(path))
        self.assertEqual(loaded.to_dict(), self.config.to_dict())

    def test_json_unknown_keys_ignored(self):
        """Test unknown keys in a JSON file are ignored."""
        path = Path(self.temp_dir.name) / "solver.json"
        path.write_text(json.dumps({"k": 3, "colour_scheme": "dark"}))
        config = SolverConfig()
        config.load_from_file(str(path))
        self.assertEqual(config.k, 3)
        self.assertFalse(hasattr(config, "colour_scheme"))

    def test_unsupported_format(self):
        """Test other suffixes are rejected."""
        with self.assertRaises(ValueError):
            self.config.load_from_file("solver.toml")

    def test_validate_invalid(self):
        """Test invalid settings raise ValueError."""
        for field_name, value in [("algo", "magic"), ("threads", 0), ("k", 0), ("matcher", "x")]:
            config = SolverConfig()
            setattr(config, field_name, value)
            with self.assertRaises(ValueError):
                config.validate_config()


class TestSolverEngine(unittest.TestCase):
    """Test dispatch, explicit routes and gadget runs."""

    def setUp(self):
        """Set up test fixtures."""
        self.temp_dir = tempfile.TemporaryDirectory()
        self.engine = SolverEngine()

    def tearDown(self):
        """Clean up temp directory."""
        self.temp_dir.cleanup()

    def test_auto_edgeless(self):
        """Test an edgeless instance dispatches to the edgeless route."""
        result = self.engine.solve(make_instance(3, [], [[1, 2], [2, 3], [3]]))
        self.assertEqual(result.route, "edgeless")
        self.assertEqual(result.to_dict(), {"status": "sat", "colors": [1, 2, 3], "route": "edgeless"})

    def test_auto_kernel_no(self):
        """Test a kernel rejection is reported as its own route."""
        result = self.engine.solve(make_instance(2, [(0, 1)], [[1], [1]]))
        self.assertEqual(result.status, "unsat")
        self.assertEqual(result.route, "kernel")
        self.assertNotIn("colors", result.to_dict())

    def test_auto_runs_on_kernel(self):
        """Test dispatch sees the reduced instance."""
        inst = make_instance(3, [(0, 1), (0, 2), (1, 2)], [[1], [1, 2, 3], [1, 2, 3]])
        result = self.engine.solve(inst)
        self.assertEqual(result.route, "two-list")
        self.assertEqual(result.kernel_n, 2)
        self.assertEqual(result.coloring[0], 1)

    def test_auto_clique(self):
        """Test a clique with large lists is taken by the fork-free route first."""
        inst = Instance(complete_graph(3), (frozenset({1, 2, 3, 4}),) * 3)
        self.assertEqual(self.engine.solve(inst).route, "chordal")

    def test_explicit_precondition(self):
        """Test an explicit route checks its precondition on the input."""
        inst = make_instance(1, [], [[1, 2, 3]])
        with self.assertRaises(PreconditionError):
            self.engine.solve(inst, algo="two-list")
        with self.assertRaises(PreconditionError):
            self.engine.solve(inst, algo="nope")

    def test_explicit_oracle(self):
        """Test the oracle route by name."""
        result = self.engine.solve(make_instance(2, [(0, 1)], [[1, 2], [1, 2]]), algo="oracle")
        self.assertEqual(result.coloring.colors, (1, 2))

    def test_verify_gadget(self):
        """Test a named gadget verification is recorded."""
        report = self.engine.verify_gadget("rotation", ell=2, j=1, k=2)
        self.assertTrue(report.passed)
        self.assertEqual(report.name, "rotation(ell=2, j=1, k=2)")
        self.assertEqual(self.engine.get_summary_statistics()["gadgets_passed"], 1)

    def test_unknown_gadget(self):
        """Test unknown kinds and parameters are precondition errors."""
        with self.assertRaises(PreconditionError):
            self.engine.build_gadget("spiral")
        with self.assertRaises(PreconditionError):
            self.engine.build_gadget("rotation", ell=2)
        self.assertIn("nae", GADGET_KINDS)

    def test_summary_statistics(self):
        """Test counts per route."""
        self.engine.solve(make_instance(1, [], [[1]]))
        self.engine.solve(make_instance(2, [(0, 1)], [[1], [1]]))
        stats = self.engine.get_summary_statistics()
        self.assertEqual(stats["routes"]["kernel"], {"sat": 0, "unsat": 1})
        self.assertEqual(sum(r["sat"] for r in stats["routes"].values()), 1)

    def test_export_all_results(self):
        """Test exported files."""
        self.engine.solve(make_instance(1, [], [[2]]))
        self.engine.verify_gadget("identity", ell=1)
        self.engine.export_all_results(self.temp_dir.name)
        out = Path(self.temp_dir.name)
        self.assertTrue((out / "results.json").exists())
        self.assertEqual(len(pd.read_csv(out / "solve_runs.csv")), 1)
        self.assertTrue(pd.read_csv(out / "gadgets.csv")["passed"].all())

    def test_initialize(self):
        """Test initialization from a file rebuilds routes."""
        path = Path(self.temp_dir.name) / "cfg.yaml"
        SolverConfig(matcher="hopcroft-karp").save_to_file(str(path))
        self.engine.initialize(str(path))
        self.assertEqual(self.engine.routes["clique-matching"].matcher, "hopcroft-karp")


class TestGadgetParams(unittest.TestCase):
    """Test key=value parsing for gadget parameters."""

    def test_parse(self):
        """Test integers, permutations and systems."""
        self.assertEqual(parse_gadget_params("rotation", ["ell=3", "j=1", "k=2"]), {"ell": 3, "j": 1, "k": 2})
        self.assertEqual(parse_gadget_params("permutation", ["sigma=2,1,3"]), {"sigma": (2, 1, 3)})
        self.assertEqual(
            parse_gadget_params("indicator", ["c=1", "n=5", "pairs=1,2/4,5"]),
            {"c": 1, "n": 5, "pairs": [(1, 2), (4, 5)]},
        )

    def test_parse_errors(self):
        """Test malformed parameters."""
        with self.assertRaises(PreconditionError):
            parse_gadget_params("rotation", ["ell"])
        with self.assertRaises(PreconditionError):
            parse_gadget_params("rotation", ["ell=three"])


class TestReportGenerator(unittest.TestCase):
    """Test report tables."""

    def setUp(self):
        """Set up test fixtures."""
        self.engine = SolverEngine()
        self.generator = ReportGenerator()

    def test_summary_requires_results(self):
        """Test the summary table needs compiled results."""
        with self.assertRaises(ValueError):
            self.generator.generate_summary_table()

    def test_summary_table(self):
        """Test sat and unsat counts per route."""
        self.engine.solve(make_instance(1, [], [[1]]))
        self.engine.solve(make_instance(2, [(0, 1)], [[1], [1]]))
        self.generator.compile_results(self.engine.results)
        table = self.generator.generate_summary_table()
        self.assertEqual(list(table.columns), ["route", "sat", "unsat"])
        self.assertEqual(int(table["sat"].sum()), 1)
        self.assertEqual(int(table["unsat"].sum()), 1)

    def test_pinning_table(self):
        """Test per-pinning rows of a report."""
        report = self.engine.verify_gadget("identity", ell=2)
        table = ReportGenerator.pinning_table(report)
        self.assertEqual(len(table), 4)
        self.assertTrue((table["status"] == "ok").all())


if __name__ == "__main__":
    unittest.main()
