"""Split graph recognition, partition classification, and maximal cliques.

A split graph partitions its vertices into a clique K and an independent
set S. Every valid split partition falls into exactly one of three classes
(Hammer-Simeone):

    balanced            |K| = omega      and |S| = alpha
    unbalanced, S-max   |K| = omega - 1  and |S| = alpha
    unbalanced, K-max   |K| = omega      and |S| = alpha - 1

In the S-max case some s in S extends K to a maximum clique; in the K-max
case some k in K extends S to a maximum independent set. Those witnesses
drive both classification and the closed-form count of maximal cliques in
the complement: omega + 1 when balanced, omega otherwise.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import ContractViolation, LimitExceeded
from .graph import Graph, _bits


class SplitClass(enum.Enum):
    BALANCED = "balanced"
    UNBALANCED_S_MAX = "unbalanced-s-max"
    UNBALANCED_K_MAX = "unbalanced-k-max"


@dataclass(frozen=True)
class SplitPartition:
    """A (K, S) split partition with its class and the graph invariants.

    witness is the extending vertex of the unbalanced cases (the smallest
    one when several exist): an S vertex adjacent to all of K for S-max,
    a K vertex with no neighbor in S for K-max. None when balanced.
    """

    clique_side: frozenset[int]
    independent_side: frozenset[int]
    split_class: SplitClass
    omega: int
    alpha: int
    witness: int | None = None


def classify(g: Graph, k: set[int] | frozenset[int], s: set[int] | frozenset[int]) -> SplitPartition:
    """Classify a caller-supplied split partition.

    omega and alpha are recomputed from the partition itself, never taken
    on trust: omega = |K| + 1 exactly when some S vertex is adjacent to
    all of K, and alpha = |S| + 1 exactly when some K vertex has no
    neighbor in S (at most one of the two can happen).
    """
    k = frozenset(k)
    s = frozenset(s)
    if k & s:
        raise ContractViolation("clique side and independent side overlap")
    if k | s != set(g.vertices()):
        raise ContractViolation("partition does not cover the vertex set")
    if not g.is_clique(k):
        raise ContractViolation("clique side is not a clique")
    if not g.is_independent(s):
        raise ContractViolation("independent side is not independent")

    k_mask = _mask(k)
    s_mask = _mask(s)
    s_full = sorted(v for v in s if g.neighbors_mask(v) & k_mask == k_mask)
    k_free = sorted(v for v in k if g.neighbors_mask(v) & s_mask == 0)

    omega = len(k) + (1 if s_full else 0)
    alpha = len(s) + (1 if k_free else 0)
    if s_full:
        cls, witness = SplitClass.UNBALANCED_S_MAX, s_full[0]
    elif k_free:
        cls, witness = SplitClass.UNBALANCED_K_MAX, k_free[0]
    else:
        cls, witness = SplitClass.BALANCED, None
    return SplitPartition(k, s, cls, omega, alpha, witness)


def recognize_split(g: Graph) -> SplitPartition | None:
    """Recognize a split graph via the degree-sequence splittance test.

    With degrees sorted nonincreasing (ties by ascending vertex id) and
    m = max{i : d_i >= i-1}, the graph is split iff
        sum_{i<=m} d_i == m(m-1) + sum_{i>m} d_i,
    in which case the first m vertices form a maximum clique. The returned
    partition is canonicalized to S-max (|S| = alpha) by moving the K-max
    witness into S when one exists, so the class is never K-max here.
    """
    if g.n == 0:
        return None
    order = sorted(g.vertices(), key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in order]
    m = max(i for i in range(1, g.n + 1) if degs[i - 1] >= i - 1)
    if sum(degs[:m]) != m * (m - 1) + sum(degs[m:]):
        return None
    part = classify(g, set(order[:m]), set(order[m:]))
    return as_s_max(g, part)


def as_s_max(g: Graph, p: SplitPartition) -> SplitPartition:
    """Normalize a split partition so that |S| = alpha.

    Balanced and S-max partitions are returned unchanged; a K-max
    partition has its witness vertex moved from K to S, which yields an
    S-max partition of the same graph with |K| = omega - 1.
    """
    if p.split_class is not SplitClass.UNBALANCED_K_MAX:
        return p
    assert p.witness is not None
    return classify(
        g,
        p.clique_side - {p.witness},
        p.independent_side | {p.witness},
    )


def mc_complement(p: SplitPartition) -> int:
    """Number of maximal cliques of the complement, by split class.

    In the complement, each clique-side vertex is its own maximal clique
    and the independent side becomes one more; the unbalanced cases each
    absorb one clique vertex, giving omega + 1 when balanced and omega
    otherwise.
    """
    if p.split_class is SplitClass.BALANCED:
        return p.omega + 1
    return p.omega


def maximal_cliques(g: Graph, limit: int = 64) -> list[tuple[int, ...]]:
    """All maximal cliques via Bron-Kerbosch with a greedy pivot.

    Independent oracle for the closed form above; output is canonical
    (each clique ascending, cliques sorted lexicographically). Graphs
    larger than `limit` vertices are refused.
    """
    if g.n > limit:
        raise LimitExceeded(f"graph has {g.n} vertices, oracle limit is {limit}")
    rows = [g.neighbors_mask(v) for v in g.vertices()]
    out: list[tuple[int, ...]] = []

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(tuple(b + 1 for b in _bits(r)))
            return
        pivot = max(_bits(p | x), key=lambda b: (p & rows[b]).bit_count())
        candidates = p & ~rows[pivot]
        for b in _bits(candidates):
            bit = 1 << b
            expand(r | bit, p & rows[b], x & rows[b])
            p &= ~bit
            x |= bit

    if g.n:
        expand(0, (1 << g.n) - 1, 0)
    return sorted(out)


def _mask(vertices: frozenset[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask
