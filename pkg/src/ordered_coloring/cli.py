"""Command-line front end: one JSON document on stdout per invocation."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional

from ordered_coloring.config.solver_config import ALGOS, MATCHERS, SUB3_SOLVERS, SolverConfig
from ordered_coloring.core.formula import Cnf3, NaeFormula, load_formula
from ordered_coloring.core.instance import is_proper
from ordered_coloring.core.kernel import kernelize
from ordered_coloring.core.patterns import find_induced, fork, nested_pair, padded_edge, padded_fork, pattern_by_name
from ordered_coloring.data.generators import random_cnf3, random_instance, random_nae
from ordered_coloring.data.instance_io import (
    decode_map_from_dict,
    instance_to_dict,
    load_coloring,
    load_instance,
    read_json,
    write_json,
)
from ordered_coloring.engine.solver_engine import GADGET_KINDS, SolverEngine, parse_gadget_params
from ordered_coloring.errors import (
    FormatError,
    GraphError,
    InvariantViolation,
    OrderedColoringError,
    PreconditionError,
)
from ordered_coloring.gadgets.jj1 import Jj1Layout, build_jj1_instance, decode_assignment
from ordered_coloring.gadgets.nae import decode_nae, reduce_nae3sat
from ordered_coloring.report.report_generator import ReportGenerator

LOG = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 64
EXIT_DATA = 65
EXIT_INTERNAL = 70

GENERATOR_PATTERNS = {
    "none": lambda ell: [],
    "fork": lambda ell: [fork()],
    "padded-edge": lambda ell: [padded_edge(ell)],
    "padded-fork": lambda ell: [padded_fork(ell)],
    "nested-pair": lambda ell: [nested_pair()],
}


class UsageError(OrderedColoringError):
    """Bad command line."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _emit(doc: Any) -> None:
    json.dump(doc, sys.stdout)
    sys.stdout.write("\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="olc", description="List coloring on ordered graphs.")
    parser.add_argument("--config", help="JSON or YAML solver configuration")
    parser.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve an instance")
    solve.add_argument("file")
    solve.add_argument("--algo", choices=ALGOS)
    solve.add_argument("--k", type=int)
    solve.add_argument("--ell", type=int)
    solve.add_argument("--sub3", choices=SUB3_SOLVERS)
    solve.add_argument("--sub3-edwards", action="store_true", default=None)
    solve.add_argument("--matcher", choices=MATCHERS)
    solve.add_argument("--threads", type=int)

    pattern = sub.add_parser("pattern", help="search for an induced ordered pattern")
    pattern.add_argument("--name", required=True)
    pattern.add_argument("file")

    kern = sub.add_parser("kernelize", help="apply the reduction rules")
    kern.add_argument("file")
    kern.add_argument("-o", "--output", help="write the reduced instance here")
    kern.add_argument("--trace", help="write the trace sidecar here")

    gadget = sub.add_parser("gadget", help="compile a formula into an instance")
    gadget.add_argument("kind", choices=["jj1", "rainbow"])
    gadget.add_argument("formula")
    gadget.add_argument("-o", "--output", help="write the instance here")
    gadget.add_argument("--layout", "--decode", dest="decode_map", help="write the decode map here")

    decode = sub.add_parser("decode", help="read an assignment off a coloring")
    decode.add_argument("--layout", "--decode", dest="decode_map", required=True)
    decode.add_argument("--coloring", required=True)
    decode.add_argument("--instance", help="compiled instance, checked for NAE decode maps")

    verify = sub.add_parser("verify", help="check a coloring against an instance")
    verify.add_argument("instance")
    verify.add_argument("coloring")

    vgad = sub.add_parser("verify-gadget", help="check a gadget's semantics by enumeration")
    vgad.add_argument("--kind", required=True, choices=GADGET_KINDS)
    vgad.add_argument("params", nargs="*", help="key=value, e.g. ell=3 j=1 k=2 or pairs=1,2/4,5")
    vgad.add_argument("--csv", help="write the per-pinning table here")
    vgad.add_argument("--timeout", type=float, help="seconds per feasibility check")
    vgad.add_argument("--threads", type=int)

    gen = sub.add_parser("generate", help="write a random instance or formula")
    gen.add_argument("what", choices=["instance", "cnf", "nae"])
    gen.add_argument("--n", type=int, default=8, help="vertices or variables")
    gen.add_argument("--m", type=int, default=4, help="clauses")
    gen.add_argument("--k", type=int, default=3)
    gen.add_argument("--p", type=float, default=0.3, help="edge probability")
    gen.add_argument("--free", choices=sorted(GENERATOR_PATTERNS), default="none")
    gen.add_argument("--ell", type=int, default=1)
    gen.add_argument("--seed", type=int)
    gen.add_argument("-o", "--output")
    return parser


def _configure(args: argparse.Namespace) -> SolverConfig:
    config = SolverConfig()
    if args.config:
        config.load_from_file(args.config)
    for key in ("algo", "k", "ell", "sub3", "sub3_edwards", "matcher", "threads", "log_level"):
        value = getattr(args, key, None)
        if value is not None:
            setattr(config, key, value)
    if getattr(args, "timeout", None) is not None:
        config.pinning_timeout = args.timeout
    if args.verbose:
        config.log_level = "DEBUG" if args.verbose > 1 else "INFO"
    try:
        config.validate_config()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return config


def _cmd_solve(args: argparse.Namespace, engine: SolverEngine) -> Dict:
    inst = load_instance(args.file)
    return engine.solve(inst).to_dict()


def _cmd_pattern(args: argparse.Namespace, engine: SolverEngine) -> Dict:
    try:
        pat = pattern_by_name(args.name)
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    witness = find_induced(load_instance(args.file).graph, pat)
    return {"free": witness is None, "witness": None if witness is None else list(witness)}


def _cmd_kernelize(args: argparse.Namespace, engine: SolverEngine) -> Dict:
    red = kernelize(load_instance(args.file))
    sidecar = red.to_dict()
    if args.trace:
        write_json(args.trace, sidecar)
    doc = dict(sidecar)
    reduced = None if red.instance is None else instance_to_dict(red.instance)
    if args.output and reduced is not None:
        write_json(args.output, reduced)
        doc["output"] = args.output
    else:
        doc["instance"] = reduced
    return doc


def _cmd_gadget(args: argparse.Namespace, engine: SolverEngine) -> Dict:
    formula = load_formula(args.formula)
    if args.kind == "jj1":
        if not isinstance(formula, Cnf3):
            raise FormatError("jj1 compiles 'p cnf' formulas")
        inst, layout = build_jj1_instance(formula)
        decode_doc = layout.to_dict()
    else:
        if not isinstance(formula, NaeFormula):
            raise FormatError("rainbow compiles 'p nae' formulas")
        inst, decode_map = reduce_nae3sat(formula)
        decode_doc = decode_map.to_dict()
    if args.decode_map:
        write_json(args.decode_map, decode_doc)
    doc = instance_to_dict(inst)
    if args.output:
        write_json(args.output, doc)
        return {"n": inst.n, "edges": inst.graph.num_edges, "output": args.output}
    return doc


def _cmd_decode(args: argparse.Namespace, engine: SolverEngine) -> Dict:
    decode_map = decode_map_from_dict(read_json(args.decode_map))
    col = load_coloring(args.coloring)
    if col is None:
        raise PreconditionError("cannot decode an unsat coloring document")
    if isinstance(decode_map, Jj1Layout):
        assignment = decode_assignment(decode_map, col)
    elif args.instance:
        assignment = decode_nae(decode_map, load_instance(args.instance), col)
    else:
        assignment = decode_map.decode(col)
    return {"assignment": list(assignment)}


def _cmd_verify(args: argparse.Namespace, engine: SolverEngine) -> Dict:
    inst = load_instance(args.instance)
    col = load_coloring(args.coloring)
    if col is None:
        return {"valid": False, "reason": "coloring document is unsat"}
    if len(col) != inst.n:
        return {"valid": False, "reason": f"coloring has {len(col)} colors for {inst.n} vertices"}
    return {"valid": is_proper(inst, col)}


def _cmd_verify_gadget(args: argparse.Namespace, engine: SolverEngine) -> Dict:
    params = parse_gadget_params(args.kind, args.params)
    report = engine.verify_gadget(args.kind, **params)
    if args.csv:
        generator = ReportGenerator()
        table = generator.pinning_table(report)
        table.to_csv(args.csv, index=False)
    return report.to_dict()


def _cmd_generate(args: argparse.Namespace, engine: SolverEngine) -> Dict:
    if args.what == "instance":
        patterns = GENERATOR_PATTERNS[args.free](args.ell)
        doc = instance_to_dict(random_instance(args.n, args.k, args.p, args.seed, patterns))
        text = None
    elif args.what == "cnf":
        formula = random_cnf3(args.n, args.m, args.seed)
        doc, text = {"num_vars": formula.num_vars, "clauses": len(formula.clauses)}, formula.to_dimacs()
    else:
        formula = random_nae(args.n, args.m, args.seed)
        doc, text = {"num_vars": formula.num_vars, "clauses": len(formula.clauses)}, formula.to_text()
    if args.output:
        if text is None:
            write_json(args.output, doc)
            return {"output": args.output, "n": doc["n"]}
        with open(args.output, "w", encoding="utf-8") as f:
            f.write(text)
        return dict(doc, output=args.output)
    if text is not None:
        doc["text"] = text
    return doc


COMMANDS = {
    "solve": _cmd_solve,
    "pattern": _cmd_pattern,
    "kernelize": _cmd_kernelize,
    "gadget": _cmd_gadget,
    "decode": _cmd_decode,
    "verify": _cmd_verify,
    "verify-gadget": _cmd_verify_gadget,
    "generate": _cmd_generate,
}


def _error_doc(exc: BaseException) -> Dict:
    witness = getattr(exc, "witness", None)
    return {
        "status": "error",
        "kind": type(exc).__name__,
        "message": str(exc),
        "witness": list(witness) if witness else [],
    }


def run(argv: Optional[List[str]] = None) -> int:
    """Execute one command and return the exit status."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        config = _configure(args)
        logging.basicConfig(
            stream=sys.stderr,
            level=getattr(logging, config.log_level.upper()),
            format="%(asctime)s %(name)s %(levelname)s %(message)s",
            force=True,
        )
        engine = SolverEngine(config=config)
        _emit(COMMANDS[args.command](args, engine))
        return EXIT_OK
    except UsageError as exc:
        _emit(_error_doc(exc))
        return EXIT_USAGE
    except (GraphError, FormatError, PreconditionError, OSError, ValueError) as exc:
        LOG.debug("input error", exc_info=True)
        _emit(_error_doc(exc))
        return EXIT_DATA
    except InvariantViolation as exc:
        LOG.error("internal invariant failed: %s", exc)
        _emit(_error_doc(exc))
        return EXIT_INTERNAL


def main(argv: Optional[List[str]] = None) -> int:
    """Console entry point."""
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
