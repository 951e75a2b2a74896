"""Exact minimum biclique partition by exhaustive branch-and-bound.

This is the ground-truth oracle: it proves optimality by exhausting the
search space below the incumbent, assuming nothing about split graphs or
clique-based lower bounds. The initial incumbent is the star construction
for split inputs and a greedy max-degree star cover otherwise.

The inner loop lives in a kernel module selected at import time: the
compiled Cython kernel (_solver_core) when the extension is available,
else the pure-Python twin (_solver_py). Both explore the identical tree;
the compiled kernel additionally requires at most 64 vertices and edges,
so oversized instances fall back to the Python kernel per call.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import _solver_py
from .errors import LimitExceeded, NotSplitError
from .graph import Graph, _bits
from .partition import (
    Biclique,
    BicliquePartition,
    bp_split,
    verify_partition,
)
from .splits import maximal_cliques, recognize_split

try:
    from . import _solver_core

    HAVE_COMPILED_KERNEL = True
except ImportError:  # extension not built
    _solver_core = None
    HAVE_COMPILED_KERNEL = False

DEFAULT_EDGE_LIMIT = 45
_COMPILED_MAX = 64


@dataclass(frozen=True)
class SolverResult:
    """Outcome of bp_exact.

    When proven_optimal is True the optimum is exact and the exhausted
    search certifies that no partition of size optimum - 1 exists. When a
    budget stopped the search, optimum is only the best upper bound found
    and the witness still verifies at that size.
    """

    optimum: int
    witness: BicliquePartition
    nodes_explored: int
    elapsed_s: float
    proven_optimal: bool
    kernel: str


def greedy_star_partition(g: Graph) -> BicliquePartition:
    """Star cover peeling the maximum-degree vertex (ties: lowest id).

    Valid for every graph; used as the solver's initial incumbent when
    the input is not split.
    """
    remaining = {v: g.neighbors_mask(v) for v in g.vertices()}
    stars = []
    while True:
        center = max(g.vertices(), key=lambda v: (remaining[v].bit_count(), -v))
        leaves = remaining[center]
        if not leaves:
            break
        leaf_list = [b + 1 for b in _bits(leaves)]
        stars.append(Biclique.of([center], leaf_list))
        for leaf in leaf_list:
            remaining[leaf] &= ~(1 << (center - 1))
        remaining[center] = 0
    return BicliquePartition(stars)


def _initial_incumbent(g: Graph) -> BicliquePartition:
    split = recognize_split(g)
    if split is not None:
        return bp_split(g).witness
    return greedy_star_partition(g)


def _select_kernel(kernel: str, n: int, m: int, cap: int):
    if kernel == "auto":
        fits = n <= _COMPILED_MAX and m <= _COMPILED_MAX and cap <= _COMPILED_MAX
        if HAVE_COMPILED_KERNEL and fits:
            return _solver_core, "compiled"
        return _solver_py, "python"
    if kernel == "compiled":
        if not HAVE_COMPILED_KERNEL:
            raise LimitExceeded("compiled kernel requested but not built")
        return _solver_core, "compiled"
    if kernel == "python":
        return _solver_py, "python"
    raise ValueError(f"unknown kernel {kernel!r}")


def bp_exact(
    g: Graph,
    node_budget: int = 0,
    time_budget_ms: int = 0,
    edge_limit: int = DEFAULT_EDGE_LIMIT,
    kernel: str = "auto",
) -> SolverResult:
    """Exact biclique partition number with an optimal witness.

    Exhaustive within `edge_limit` edges (default 45). Budgets of 0 mean
    unlimited; a node budget aborts deterministically at that node count,
    a time budget approximately at the wall-clock deadline. The witness
    is deterministic for the fixed branching order.
    """
    if g.edge_count > edge_limit:
        raise LimitExceeded(
            f"graph has {g.edge_count} edges, solver limit is {edge_limit}"
        )
    start = time.monotonic()
    incumbent = _initial_incumbent(g)
    if g.edge_count == 0:
        return SolverResult(0, BicliquePartition([]), 0, 0.0, True, "none")

    edges0 = [(u - 1, v - 1) for u, v in g.edges()]
    adj0 = [g.neighbors_mask(v) for v in g.vertices()]
    init_a = [_mask0(b.part_a) for b in incumbent]
    init_b = [_mask0(b.part_b) for b in incumbent]

    mod, kernel_name = _select_kernel(kernel, g.n, len(edges0), len(init_a))
    best_r, best_a, best_b, nodes, exhausted = mod.search(
        g.n,
        edges0,
        adj0,
        init_a,
        init_b,
        node_budget,
        time_budget_ms / 1000.0,
    )
    witness = BicliquePartition(
        Biclique.of(_verts1(a), _verts1(b)) for a, b in zip(best_a, best_b)
    )
    elapsed = time.monotonic() - start
    check = verify_partition(g, witness)
    if not check:
        raise AssertionError(f"solver produced an invalid witness: {check.describe()}")
    return SolverResult(best_r, witness, nodes, elapsed, exhausted, kernel_name)


@dataclass(frozen=True)
class TheoremReport:
    """Three independent routes to bp of a split graph, and their verdict.

    exact comes from the branch-and-bound search, closed_form from the
    split-class formula, mc_minus_1 from Bron-Kerbosch enumeration on the
    complement; passed means all three agree.
    """

    exact: int
    closed_form: int
    mc_minus_1: int

    @property
    def passed(self) -> bool:
        return self.exact == self.closed_form == self.mc_minus_1


def check_theorem(
    g: Graph,
    node_budget: int = 0,
    time_budget_ms: int = 0,
    edge_limit: int = DEFAULT_EDGE_LIMIT,
    kernel: str = "auto",
) -> TheoremReport:
    """Cross-check the closed form against the solver and the enumeration."""
    if recognize_split(g) is None:
        raise NotSplitError("theorem check requires a split graph")
    result = bp_exact(g, node_budget, time_budget_ms, edge_limit, kernel)
    closed = bp_split(g).value
    mc = len(maximal_cliques(g.complement()))
    return TheoremReport(result.optimum, closed, mc - 1)


def _mask0(vertices: frozenset[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def _verts1(mask: int) -> list[int]:
    return [b + 1 for b in _bits(mask)]
