"""Route registry, automatic dispatch and gadget verification runs."""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ordered_coloring.config.solver_config import SolverConfig
from ordered_coloring.core.instance import Coloring, Instance, is_proper
from ordered_coloring.core.kernel import kernelize, lift
from ordered_coloring.errors import InvariantViolation, PreconditionError
from ordered_coloring.gadgets import (
    Link,
    LinkReport,
    identity_expectation,
    identity_link,
    indicator_expectation,
    indicator_gadget,
    nae_expectation,
    nae_gadget,
    notcc_expectation,
    notcc_gadget,
    notccc_expectation,
    notccc_gadget,
    permutation_expectation,
    permutation_gadget,
    rotation_gadget,
    verify_link_semantics,
)
from ordered_coloring.gadgets.permutation import Rotation
from ordered_coloring.gadgets.verify import Expectation
from ordered_coloring.report.report_generator import ReportGenerator
from ordered_coloring.solvers import (
    ChordalSolver,
    CliqueMatchingSolver,
    EdgelessSolver,
    Ljj4Solver,
    ListColoringSolver,
    OracleSolver,
    SingleEdgeSolver,
    TwoListSolver,
)

LOG = logging.getLogger(__name__)

AUTO_ORDER = ("edgeless", "two-list", "chordal", "clique-matching", "single-edge", "ljj4")


@dataclass
class SolveResult:
    """One solver run."""

    route: str
    coloring: Optional[Coloring]
    n: int
    kernel_n: int
    elapsed: float

    @property
    def status(self) -> str:
        """'sat' or 'unsat'."""
        return "sat" if self.coloring is not None else "unsat"

    def to_dict(self) -> Dict:
        """JSON document reported by the command line."""
        doc: Dict = {"status": self.status}
        if self.coloring is not None:
            doc["colors"] = list(self.coloring.colors)
        doc["route"] = self.route
        return doc

    def record(self) -> Dict:
        """Flat row for the summary table."""
        return {
            "route": self.route,
            "status": self.status,
            "n": self.n,
            "kernel_n": self.kernel_n,
            "elapsed": self.elapsed,
        }


def _gadget_kinds() -> Dict[str, Callable[..., Tuple[Link, Expectation]]]:
    return {
        "identity": lambda ell: (identity_link(ell), identity_expectation()),
        "rotation": lambda ell, j, k: (
            rotation_gadget(ell, j, k),
            permutation_expectation(Rotation(ell, j, k).as_permutation()),
        ),
        "permutation": lambda sigma: (permutation_gadget(sigma), permutation_expectation(sigma)),
        "indicator": lambda c, n, pairs: (
            indicator_gadget(c, n, pairs),
            indicator_expectation(c, n, pairs),
        ),
        "notcc": lambda c, n, pairs: (notcc_gadget(c, n, pairs), notcc_expectation(c, n, pairs)),
        "notccc": lambda c, n, triples: (
            notccc_gadget(c, n, triples),
            notccc_expectation(c, n, triples),
        ),
        "nae": lambda n, triples: (nae_gadget(n, triples), nae_expectation(n, triples)),
    }


GADGET_KINDS = tuple(_gadget_kinds())


@dataclass
class SolverEngine:
    """Main orchestrator for solving and verification."""

    config: SolverConfig = field(default_factory=SolverConfig)
    routes: Dict[str, ListColoringSolver] = field(default_factory=dict)
    report_generator: ReportGenerator = field(default_factory=ReportGenerator)
    results: Dict[str, List] = field(default_factory=lambda: {"solve": [], "gadgets": []})

    def __post_init__(self) -> None:
        if not self.routes:
            self.build_routes()

    def initialize(self, config_path: str) -> None:
        """Initialize engine from configuration."""
        self.config.load_from_file(config_path)
        self.config.validate_config()
        self.build_routes()

    def build_routes(self) -> None:
        """One solver per route, parameterized by the configuration."""
        cfg = self.config
        ell = max(cfg.ell, 1)
        self.routes = {
            "oracle": OracleSolver(),
            "edgeless": EdgelessSolver(),
            "two-list": TwoListSolver(),
            "chordal": ChordalSolver(),
            "clique-matching": CliqueMatchingSolver(matcher=cfg.matcher),
            "single-edge": SingleEdgeSolver(k=cfg.k, ell=ell, threads=cfg.threads),
            "ljj4": Ljj4Solver(
                ell=ell, sub3=cfg.sub3, sub3_edwards=cfg.sub3_edwards, threads=cfg.threads
            ),
        }

    def select_route(self, inst: Instance) -> str:
        """First route in dispatch order whose preconditions hold."""
        for name in AUTO_ORDER:
            if self.routes[name].accepts(inst):
                LOG.debug("auto dispatch: %s accepts %d vertices", name, inst.n)
                return name
        return "oracle"

    def solve(self, inst: Instance, algo: Optional[str] = None) -> SolveResult:
        """Solve with the named route, or dispatch automatically on the kernel."""
        algo = algo or self.config.algo
        start = time.perf_counter()
        if algo == "auto":
            red = kernelize(inst)
            if red.is_no:
                route, coloring, kernel_n = "kernel", None, 0
            else:
                route = self.select_route(red.instance)
                kernel_n = red.instance.n
                sub = self.routes[route].solve(red.instance)
                coloring = None if sub is None else lift(red, sub)
        else:
            if algo not in self.routes:
                raise PreconditionError(f"unknown route {algo!r}")
            route, kernel_n = algo, inst.n
            solver = self.routes[algo]
            solver.check(inst)
            coloring = solver.solve(inst)
        if coloring is not None and not is_proper(inst, coloring):
            raise InvariantViolation(f"route {route} returned an improper coloring")
        result = SolveResult(route, coloring, inst.n, kernel_n, time.perf_counter() - start)
        LOG.info("route %s: %s in %.3fs", route, result.status, result.elapsed)
        self.results["solve"].append(result)
        return result

    def build_gadget(self, kind: str, **params) -> Tuple[Link, Expectation]:
        """Construct a named gadget with its intended behavior."""
        kinds = _gadget_kinds()
        if kind not in kinds:
            raise PreconditionError(f"unknown gadget kind {kind!r}")
        try:
            return kinds[kind](**params)
        except TypeError as exc:
            raise PreconditionError(f"bad parameters for {kind} gadget: {exc}") from None

    def verify_gadget(self, kind: str, **params) -> LinkReport:
        """Build a gadget and check its semantics by enumeration."""
        link, expectation = self.build_gadget(kind, **params)
        name = kind + "(" + ", ".join(f"{k}={v}" for k, v in sorted(params.items())) + ")"
        report = verify_link_semantics(
            link,
            expectation,
            name=name,
            timeout=self.config.pinning_timeout,
            threads=self.config.threads,
        )
        self.results["gadgets"].append(report)
        return report

    def export_all_results(self, output_dir: str = "./output") -> None:
        """Export run tables and the JSON summary."""
        self.report_generator.output_dir = output_dir
        self.report_generator.compile_results(self.results)
        self.report_generator.save_json_results("results.json")
        if self.results["solve"]:
            self.report_generator.export_to_csv(self.report_generator.solver_table(), "solve_runs.csv")
        if self.results["gadgets"]:
            self.report_generator.export_to_csv(self.report_generator.gadget_summary(), "gadgets.csv")

    def get_summary_statistics(self) -> Dict:
        """Counts per route and verification outcome."""
        by_route: Dict[str, Dict[str, int]] = {}
        for run in self.results["solve"]:
            entry = by_route.setdefault(run.route, {"sat": 0, "unsat": 0})
            entry[run.status] += 1
        return {
            "routes": by_route,
            "gadgets_passed": sum(r.passed for r in self.results["gadgets"]),
            "gadgets_failed": sum(not r.passed for r in self.results["gadgets"]),
        }


def parse_gadget_params(kind: str, values: Sequence[str]) -> Dict:
    """Turn ``key=value`` strings into keyword arguments for build_gadget.

    Integers are plain (``ell=3``); permutations and tuples are comma lists
    (``sigma=2,1,3``); systems separate members with ``/`` (``pairs=1,2/4,5``).
    """
    params: Dict = {}
    for item in values:
        key, sep, raw = item.partition("=")
        if not sep:
            raise PreconditionError(f"gadget parameter {item!r} is not key=value")
        if key in ("pairs", "triples"):
            params[key] = [tuple(int(x) for x in part.split(",")) for part in raw.split("/") if part]
        elif key == "sigma":
            params[key] = tuple(int(x) for x in raw.split(","))
        else:
            try:
                params[key] = int(raw)
            except ValueError:
                raise PreconditionError(f"gadget parameter {key} must be an integer") from None
    LOG.debug("gadget %s parameters: %s", kind, params)
    return params
