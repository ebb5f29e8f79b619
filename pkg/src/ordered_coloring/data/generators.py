"""Seeded random instances and formulas for tests and benchmarks."""

from __future__ import annotations

import logging
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from ordered_coloring.core.formula import Cnf3, NaeFormula
from ordered_coloring.core.graph import OrderedGraph, build_graph
from ordered_coloring.core.instance import Instance
from ordered_coloring.core.patterns import Pattern, contains_clique, find_induced

LOG = logging.getLogger(__name__)

Seed = Union[int, np.random.Generator, None]


def make_rng(seed: Seed = None) -> np.random.Generator:
    """Generator from a seed, or the generator itself."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_graph(n: int, p: float, seed: Seed = None) -> OrderedGraph:
    """Each pair is an edge independently with probability p."""
    rng = make_rng(seed)
    if n < 2:
        return build_graph(n, [])
    draws = rng.random((n, n))
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if draws[u, v] < p]
    return build_graph(n, edges)


def random_lists(n: int, k: int, seed: Seed = None, max_size: Optional[int] = None) -> list:
    """Nonempty random subsets of 1..k, at most max_size colors each."""
    rng = make_rng(seed)
    cap = k if max_size is None else min(k, max_size)
    lists = []
    for _ in range(n):
        size = int(rng.integers(1, cap + 1))
        lists.append(sorted(int(c) + 1 for c in rng.choice(k, size=size, replace=False)))
    return lists


def repair(g: OrderedGraph, patterns: Iterable[Pattern], max_clique: Optional[int] = None) -> OrderedGraph:
    """Delete witness edges until no pattern (and no clique of size max_clique) remains."""
    patterns = list(patterns)
    removed = 0
    while True:
        target = None
        for p in patterns:
            witness = find_induced(g, p)
            if witness is not None:
                u, v = p.graph.edges()[0]
                target = (witness[u], witness[v])
                break
        if target is None and max_clique is not None:
            clique = contains_clique(g, max_clique)
            if clique is not None:
                target = (clique[0], clique[1])
        if target is None:
            LOG.debug("repair removed %d edges", removed)
            return g
        g = g.without_edges([target])
        removed += 1


def pattern_free_graph(
    n: int,
    p: float,
    patterns: Sequence[Pattern],
    seed: Seed = None,
    max_clique: Optional[int] = None,
) -> OrderedGraph:
    """Random graph repaired to exclude every pattern in ``patterns``."""
    return repair(random_graph(n, p, seed), patterns, max_clique)


def random_instance(
    n: int,
    k: int,
    p: float,
    seed: Seed = None,
    patterns: Sequence[Pattern] = (),
    max_size: Optional[int] = None,
    max_clique: Optional[int] = None,
) -> Instance:
    """Random list instance over colors 1..k, optionally pattern-free."""
    rng = make_rng(seed)
    graph = pattern_free_graph(n, p, patterns, rng, max_clique)
    lists = random_lists(n, k, rng, max_size)
    return Instance(graph, tuple(frozenset(lst) for lst in lists), k)


def random_cnf3(num_vars: int, num_clauses: int, seed: Seed = None) -> Cnf3:
    """Clauses over three distinct variables with random signs."""
    if num_vars < 3 and num_clauses:
        raise ValueError("3-CNF clauses need at least three variables")
    rng = make_rng(seed)
    clauses = []
    for _ in range(num_clauses):
        variables = rng.choice(num_vars, size=3, replace=False) + 1
        signs = rng.choice([-1, 1], size=3)
        clauses.append(tuple(int(v * s) for v, s in zip(variables, signs)))
    return Cnf3(num_vars, tuple(clauses))


def random_nae(
    num_vars: int, num_clauses: int, seed: Seed = None, max_occurrences: Optional[int] = 4
) -> NaeFormula:
    """Positive NAE formula; variables exceeding max_occurrences are not drawn again."""
    if num_vars < 3 and num_clauses:
        raise ValueError("NAE clauses need at least three variables")
    rng = make_rng(seed)
    counts = np.zeros(num_vars, dtype=int)
    clauses = []
    for _ in range(num_clauses):
        open_vars = np.flatnonzero(counts < max_occurrences) if max_occurrences else np.arange(num_vars)
        if len(open_vars) < 3:
            LOG.debug("random_nae stopped at %d clauses: occurrence cap reached", len(clauses))
            break
        chosen = rng.choice(open_vars, size=3, replace=False)
        counts[chosen] += 1
        clauses.append(tuple(sorted(int(v) + 1 for v in chosen)))
    return NaeFormula(num_vars, tuple(clauses))
