"""Undirected simple graphs on vertices 1..n with bitset adjacency rows.

Graphs are immutable after construction; every operation returns a new
graph. Adjacency is one Python int per vertex (bit v-1 set when adjacent
to v), which makes neighborhood queries, complement and clique checks a
few word operations each.

File format (DIMACS-like edge list, line oriented):
    c <comment>               any number of comment lines
    p edge <n> <m>            exactly one header
    e <u> <v>                 m edge lines, 1 <= u,v <= n, u != v
Emission is canonical: header first, then edges sorted with u < v.
"""

from __future__ import annotations

import logging
from typing import Iterable, Iterator, NamedTuple

from .errors import ContractViolation, FormatError

log = logging.getLogger(__name__)


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable undirected simple graph with vertices 1..n."""

    __slots__ = ("n", "_rows")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ContractViolation("vertex count must be nonnegative")
        rows = [0] * n
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ContractViolation(f"edge ({u},{v}) out of range 1..{n}")
            if u == v:
                raise ContractViolation(f"self-loop at vertex {u}")
            rows[u - 1] |= 1 << (v - 1)
            rows[v - 1] |= 1 << (u - 1)
        self.n = n
        self._rows = tuple(rows)

    @classmethod
    def _from_rows(cls, rows: tuple[int, ...]) -> "Graph":
        g = object.__new__(cls)
        g.n = len(rows)
        g._rows = rows
        return g

    # -- queries ----------------------------------------------------------

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._rows[u - 1] >> (v - 1) & 1)

    def neighbors_mask(self, v: int) -> int:
        self._check_vertex(v)
        return self._rows[v - 1]

    def neighbors(self, v: int) -> list[int]:
        return [b + 1 for b in _bits(self.neighbors_mask(v))]

    def degree(self, v: int) -> int:
        return self.neighbors_mask(v).bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted lexicographically."""
        out = []
        for u in range(1, self.n + 1):
            higher = self._rows[u - 1] >> u  # neighbors above u
            out.extend((u, u + 1 + b) for b in _bits(higher))
        return out

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self._rows) // 2

    def isolated_vertices(self) -> list[int]:
        return [v for v in self.vertices() if not self._rows[v - 1]]

    def is_clique(self, vertices: Iterable[int]) -> bool:
        """True iff the given vertices are pairwise adjacent."""
        vs = list(vertices)
        mask = self._vertex_mask(vs)
        return all(mask & ~self._rows[v - 1] == 1 << (v - 1) for v in vs)

    def is_independent(self, vertices: Iterable[int]) -> bool:
        """True iff no two of the given vertices are adjacent."""
        vs = list(vertices)
        mask = self._vertex_mask(vs)
        return all(mask & self._rows[v - 1] == 0 for v in vs)

    # -- derived graphs ----------------------------------------------------

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        rows = tuple(
            ~r & full & ~(1 << i) for i, r in enumerate(self._rows)
        )
        return Graph._from_rows(rows)

    def induced(self, vertices: Iterable[int]) -> "Induced":
        """Subgraph induced by the given vertices, relabeled to 1..|s|.

        Returns the relabeled graph together with the label map: entry i
        holds the original id of new vertex i+1 (labels ascend).
        """
        labels = tuple(sorted(set(vertices)))
        for v in labels:
            self._check_vertex(v)
        index = {v: i for i, v in enumerate(labels)}
        rows = [0] * len(labels)
        for v in labels:
            row = 0
            for b in _bits(self._rows[v - 1]):
                w = b + 1
                if w in index:
                    row |= 1 << index[w]
            rows[index[v]] = row
        return Induced(Graph._from_rows(tuple(rows)), labels)

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self._rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"

    def _check_vertex(self, v: int) -> None:
        if not (1 <= v <= self.n):
            raise ContractViolation(f"vertex {v} out of range 1..{self.n}")

    def _vertex_mask(self, vs: Iterable[int]) -> int:
        mask = 0
        for v in vs:
            self._check_vertex(v)
            mask |= 1 << (v - 1)
        return mask


class Induced(NamedTuple):
    graph: Graph
    labels: tuple[int, ...]


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ContractViolation("complete graph needs at least one vertex")
    full = (1 << n) - 1
    return Graph._from_rows(tuple(full & ~(1 << i) for i in range(n)))


# -- file format ------------------------------------------------------------


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format; duplicate edges are dropped with a warning."""
    n = m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    edge_lines = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise FormatError("duplicate header", lineno)
            if len(fields) != 4 or fields[1] != "edge":
                raise FormatError("header must be 'p edge <n> <m>'", lineno)
            try:
                n, m = int(fields[2]), int(fields[3])
            except ValueError:
                raise FormatError("header counts must be integers", lineno) from None
            if n < 0 or m < 0:
                raise FormatError("header counts must be nonnegative", lineno)
        elif fields[0] == "e":
            if n is None:
                raise FormatError("edge line before header", lineno)
            if len(fields) != 3:
                raise FormatError("edge line must be 'e <u> <v>'", lineno)
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise FormatError("edge endpoints must be integers", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise FormatError(f"vertex out of range 1..{n}", lineno)
            if u == v:
                raise FormatError(f"self-loop at vertex {u}", lineno)
            edge_lines += 1
            key = (min(u, v), max(u, v))
            if key in seen:
                log.warning("line %d: duplicate edge %d %d dropped", lineno, u, v)
            else:
                seen.add(key)
                edges.append(key)
        else:
            raise FormatError(f"unknown line type {fields[0]!r}", lineno)
    if n is None:
        raise FormatError("missing 'p edge <n> <m>' header")
    if edge_lines != m:
        raise FormatError(f"header declares {m} edges, found {edge_lines} edge lines")
    return Graph(n, edges)


def format_graph(g: Graph) -> str:
    """Canonical emission: header, then edges sorted with u < v."""
    lines = [f"p edge {g.n} {g.edge_count}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
