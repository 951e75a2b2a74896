"""Biclique partitions: the data model, verification, constructions, audits.

A biclique is a complete bipartite subgraph; its edge set is exactly the
cross pairs part_a x part_b. A biclique partition of a graph is a list of
bicliques whose edge sets are pairwise disjoint and together cover every
edge exactly once. For split graphs the minimum size is computable in
closed form (one less than the number of maximal cliques of the
complement) and an optimal partition is a sequence of stars centered at
the clique side.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ContractViolation, FormatError, NotSplitError
from .graph import Graph
from .splits import SplitClass, SplitPartition, mc_complement, recognize_split

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Biclique:
    """Two disjoint nonempty vertex sets; the edges are all cross pairs.

    Orientation (which part is part_a) is significant only as a storage
    convention: constructions put star centers in part_a, and addressings
    map part_a to symbol 0. `canonical` orients the part with the smaller
    minimum vertex first.
    """

    part_a: frozenset[int]
    part_b: frozenset[int]

    def __post_init__(self):
        if not self.part_a or not self.part_b:
            raise ContractViolation("biclique parts must be nonempty")
        if self.part_a & self.part_b:
            raise ContractViolation("biclique parts must be disjoint")

    @classmethod
    def of(cls, part_a: Iterable[int], part_b: Iterable[int]) -> "Biclique":
        return cls(frozenset(part_a), frozenset(part_b))

    @classmethod
    def canonical(cls, part_a: Iterable[int], part_b: Iterable[int]) -> "Biclique":
        a, b = frozenset(part_a), frozenset(part_b)
        if a and b and min(b) < min(a):
            a, b = b, a
        return cls(a, b)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Cross pairs as (u, v) with u < v."""
        for a in self.part_a:
            for b in self.part_b:
                yield (a, b) if a < b else (b, a)

    @property
    def edge_count(self) -> int:
        return len(self.part_a) * len(self.part_b)

    def center(self) -> int | None:
        """The star center, or None if neither part is a singleton.

        When both parts are singletons the stored orientation decides:
        part_a is the center.
        """
        if len(self.part_a) == 1:
            return next(iter(self.part_a))
        if len(self.part_b) == 1:
            return next(iter(self.part_b))
        return None


class BicliquePartition(Sequence[Biclique]):
    """An ordered list of bicliques claimed to partition a graph's edges."""

    __slots__ = ("bicliques",)

    def __init__(self, bicliques: Iterable[Biclique]):
        self.bicliques = tuple(bicliques)

    @property
    def r(self) -> int:
        return len(self.bicliques)

    def __len__(self) -> int:
        return len(self.bicliques)

    def __getitem__(self, i):
        return self.bicliques[i]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BicliquePartition)
            and self.bicliques == other.bicliques
        )

    def __hash__(self) -> int:
        return hash(self.bicliques)

    def __repr__(self) -> str:
        return f"BicliquePartition(r={self.r})"


# -- verification -------------------------------------------------------------


@dataclass(frozen=True)
class Verification:
    """Outcome of verify_partition; falsy when a violation was found.

    For invalid partitions, `reason` is one of "uncovered",
    "multiply-covered", "non-edge", plus the offending edge and/or
    1-based biclique index.
    """

    ok: bool
    reason: str | None = None
    edge: tuple[int, int] | None = None
    index: int | None = None

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "valid"
        parts = [self.reason or "invalid"]
        if self.edge is not None:
            parts.append(f"edge {self.edge[0]}-{self.edge[1]}")
        if self.index is not None:
            parts.append(f"biclique {self.index}")
        return ": ".join((parts[0], ", ".join(parts[1:]))) if parts[1:] else parts[0]


def verify_partition(g: Graph, p: BicliquePartition) -> Verification:
    """Check that p is a biclique partition of g's edge set.

    Valid iff every biclique's cross pairs are edges of g and every edge
    of g is covered exactly once. The first violation in a fixed scan
    order is reported: edges in sorted order first (uncovered or multiply
    covered), then bicliques by index (cross pair not an edge).
    """
    for i, b in enumerate(p, start=1):
        for v in b.part_a | b.part_b:
            if not 1 <= v <= g.n:
                raise ContractViolation(f"biclique {i}: vertex {v} not in graph")

    cover: dict[tuple[int, int], int] = {}
    bad_pair: tuple[int, tuple[int, int]] | None = None
    for i, b in enumerate(p, start=1):
        for e in sorted(b.edges()):
            if not g.has_edge(*e):
                if bad_pair is None:
                    bad_pair = (i, e)
            else:
                cover[e] = cover.get(e, 0) + 1

    for e in g.edges():
        times = cover.get(e, 0)
        if times == 0:
            return Verification(False, "uncovered", edge=e)
        if times > 1:
            return Verification(False, "multiply-covered", edge=e)
    if bad_pair is not None:
        i, e = bad_pair
        return Verification(False, "non-edge", edge=e, index=i)
    return Verification(True)


# -- constructions ------------------------------------------------------------


def _peel_stars(g: Graph, centers: Sequence[int]) -> BicliquePartition:
    """Star at each center over its not-yet-covered incident edges.

    Centers go to part_a. Empty stars cannot arise for correctly
    classified split partitions (every clique vertex keeps at least its
    independent-side neighbors); they are dropped defensively if they do.
    """
    remaining = {v: g.neighbors_mask(v) for v in g.vertices()}
    stars = []
    for c in centers:
        leaves = remaining[c]
        if not leaves:
            log.warning("empty star at vertex %d dropped", c)
            continue
        leaf_set = []
        m = leaves
        while m:
            low = m & -m
            leaf_set.append(low.bit_length())
            m ^= low
        stars.append(Biclique.of([c], leaf_set))
        for leaf in leaf_set:
            remaining[leaf] &= ~(1 << (c - 1))
        remaining[c] = 0
    return BicliquePartition(stars)


def star_partition_unbalanced(
    g: Graph, p: SplitPartition, order: Sequence[int] | None = None
) -> BicliquePartition:
    """Optimal partition for an unbalanced (S-max) split graph.

    One star per clique vertex, processed in ascending id (or the given
    order), each covering the center's still-uncovered edges: omega - 1
    bicliques. K-max partitions must be normalized with as_s_max first.
    """
    if p.split_class is not SplitClass.UNBALANCED_S_MAX:
        raise ContractViolation(
            f"expected an unbalanced S-max partition, got {p.split_class.value}"
        )
    centers = _check_order(p, order)
    return _peel_stars(g, centers)


def star_partition_balanced(
    g: Graph, p: SplitPartition, order: Sequence[int] | None = None
) -> BicliquePartition:
    """Optimal partition for a balanced split graph: omega stars on K."""
    if p.split_class is not SplitClass.BALANCED:
        raise ContractViolation(
            f"expected a balanced partition, got {p.split_class.value}"
        )
    centers = _check_order(p, order)
    return _peel_stars(g, centers)


def _check_order(p: SplitPartition, order: Sequence[int] | None) -> list[int]:
    if order is None:
        return sorted(p.clique_side)
    if set(order) != set(p.clique_side) or len(order) != len(p.clique_side):
        raise ContractViolation("order must enumerate the clique side exactly once")
    return list(order)


@dataclass(frozen=True)
class SplitBp:
    """bp value of a split graph with an optimal witness partition."""

    value: int
    witness: BicliquePartition
    partition: SplitPartition


def bp_split(g: Graph) -> SplitBp:
    """Closed-form biclique partition number of a split graph.

    The value is mc_complement(partition) - 1; the witness is the star
    construction matching the partition's class and always has exactly
    that many bicliques.
    """
    p = recognize_split(g)
    if p is None:
        raise NotSplitError(
            "graph is not split; use the exact solver (bp_exact) instead"
        )
    if g.isolated_vertices():
        log.debug(
            "graph has isolated vertices %s; they join the independent side",
            g.isolated_vertices(),
        )
    if p.split_class is SplitClass.BALANCED:
        witness = star_partition_balanced(g, p)
    else:
        witness = star_partition_unbalanced(g, p)
    value = mc_complement(p) - 1
    if witness.r != value:
        raise AssertionError(
            f"star construction produced {witness.r} bicliques, expected {value}"
        )
    return SplitBp(value, witness, p)


# -- audits -------------------------------------------------------------------


def stars_centered_in(p: BicliquePartition, s: Iterable[int]) -> list[int]:
    """1-based indices of bicliques that are stars centered inside s."""
    s = frozenset(s)
    return [i for i, b in enumerate(p, start=1) if b.center() in s]


def parts_contained_in(p: BicliquePartition, s: Iterable[int]) -> list[int]:
    """1-based indices of bicliques with a whole part inside s."""
    s = frozenset(s)
    return [
        i
        for i, b in enumerate(p, start=1)
        if b.part_a <= s or b.part_b <= s
    ]


# -- serialization ------------------------------------------------------------


def format_partition(p: BicliquePartition) -> str:
    """One line per biclique: 'B <i> : a1 a2 ... | b1 b2 ...'."""
    lines = []
    for i, b in enumerate(p, start=1):
        a = " ".join(str(v) for v in sorted(b.part_a))
        bb = " ".join(str(v) for v in sorted(b.part_b))
        lines.append(f"B {i} : {a} | {bb}")
    return "\n".join(lines) + ("\n" if lines else "")


def parse_partition(text: str) -> BicliquePartition:
    bicliques = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if not line.startswith("B"):
            raise FormatError("expected 'B <i> : a... | b...'", lineno)
        try:
            head, body = line.split(":", 1)
            index = int(head.split()[1])
            a_text, b_text = body.split("|", 1)
            part_a = [int(t) for t in a_text.split()]
            part_b = [int(t) for t in b_text.split()]
        except (ValueError, IndexError):
            raise FormatError("expected 'B <i> : a... | b...'", lineno) from None
        if index != len(bicliques) + 1:
            raise FormatError(
                f"biclique index {index} out of order (expected {len(bicliques) + 1})",
                lineno,
            )
        try:
            bicliques.append(Biclique.of(part_a, part_b))
        except ContractViolation as exc:
            raise FormatError(str(exc), lineno) from None
    return BicliquePartition(bicliques)
