"""Squashed-cube addressings: strings over {0,1,*} and the partition bijection.

A length-m string with j jokers (*) names a subcube of 2^j binary strings.
The distance between two strings counts coordinates where one has 0 and
the other 1; jokers absorb mismatches. A family is 1-neighborly when all
pairwise distances are exactly 1, in which case the subcubes are pairwise
disjoint and the volume sum(2^j) equals the number of binary strings
covered.

Biclique partitions of a graph and addressings correspond coordinate by
coordinate: in coordinate i a vertex reads 0 if it sits in the first part
of biclique i, 1 in the second part, * outside. Stars built by this
package put centers in the first part, so independent-side vertices of a
split graph only ever read 1 or *.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import ContractViolation, FormatError, LimitExceeded
from .graph import Graph
from .partition import Biclique, BicliquePartition, verify_partition

FORMULA_LENGTH_LIMIT = 62
ENUMERATION_LENGTH_LIMIT = 17

_ALPHABET = frozenset("01*")


@dataclass(frozen=True)
class AddressString:
    """A string over {0,1,*} stored as zero/one coordinate bitmasks.

    Bit i of `zeros` (resp. `ones`) is set when coordinate i+1 is 0
    (resp. 1); remaining coordinates are jokers.
    """

    length: int
    zeros: int
    ones: int

    def __post_init__(self):
        if self.zeros & self.ones:
            raise ContractViolation("a coordinate cannot be both 0 and 1")
        if (self.zeros | self.ones) >> self.length:
            raise ContractViolation("coordinate beyond string length")

    @classmethod
    def from_text(cls, text: str) -> "AddressString":
        zeros = ones = 0
        for i, ch in enumerate(text):
            if ch == "0":
                zeros |= 1 << i
            elif ch == "1":
                ones |= 1 << i
            elif ch != "*":
                raise ContractViolation(f"invalid symbol {ch!r} in address string")
        return cls(len(text), zeros, ones)

    @property
    def joker_count(self) -> int:
        return self.length - (self.zeros | self.ones).bit_count()

    @property
    def subcube_size(self) -> int:
        return 1 << self.joker_count

    def resolutions(self) -> Iterator[int]:
        """The subcube: every 0/1 resolution of the jokers, as bitmasks of ones."""
        jokers = [b for b in range(self.length) if not (self.zeros | self.ones) >> b & 1]
        for pick in range(1 << len(jokers)):
            word = self.ones
            for i, b in enumerate(jokers):
                if pick >> i & 1:
                    word |= 1 << b
            yield word

    def __str__(self) -> str:
        return "".join(
            "0" if self.zeros >> i & 1 else "1" if self.ones >> i & 1 else "*"
            for i in range(self.length)
        )


def distance(x: AddressString, y: AddressString) -> int:
    """Coordinates where one string has 0 and the other 1."""
    if x.length != y.length:
        raise ContractViolation("address strings differ in length")
    return ((x.zeros & y.ones) | (x.ones & y.zeros)).bit_count()


def _common_length(family: Iterable[AddressString]) -> int:
    lengths = {x.length for x in family}
    if len(lengths) > 1:
        raise ContractViolation("family mixes string lengths")
    return lengths.pop() if lengths else 0


def volume(family: Iterable[AddressString]) -> int:
    """sum of subcube sizes 2^j(x); equals covered strings when 1-neighborly."""
    family = list(family)
    m = _common_length(family)
    if m > FORMULA_LENGTH_LIMIT:
        raise LimitExceeded(f"volume formula limited to length {FORMULA_LENGTH_LIMIT}")
    return sum(x.subcube_size for x in family)


def covered_strings(family: Iterable[AddressString]) -> set[int]:
    """Union of the subcubes by explicit enumeration (short strings only)."""
    family = list(family)
    m = _common_length(family)
    if m > ENUMERATION_LENGTH_LIMIT:
        raise LimitExceeded(
            f"subcube enumeration limited to length {ENUMERATION_LENGTH_LIMIT}"
        )
    out: set[int] = set()
    for x in family:
        out.update(x.resolutions())
    return out


def is_one_neighborly(family: Iterable[AddressString]) -> bool:
    """True iff every pair of distinct strings is at distance exactly 1."""
    family = list(family)
    _common_length(family)
    return all(
        distance(family[i], family[j]) == 1
        for i in range(len(family))
        for j in range(i + 1, len(family))
    )


class Addressing(Mapping[int, AddressString]):
    """A per-vertex assignment of equal-length address strings."""

    __slots__ = ("strings", "length")

    def __init__(self, strings: Mapping[int, AddressString]):
        self.strings = dict(sorted(strings.items()))
        self.length = _common_length(self.strings.values())

    def __getitem__(self, v: int) -> AddressString:
        return self.strings[v]

    def __iter__(self):
        return iter(self.strings)

    def __len__(self) -> int:
        return len(self.strings)

    def family(self) -> list[AddressString]:
        return list(self.strings.values())

    def __repr__(self) -> str:
        return f"Addressing(vertices={len(self)}, length={self.length})"


def partition_to_addressing(g: Graph, p: BicliquePartition) -> Addressing:
    """Coordinate i reads 0 in part_a of biclique i, 1 in part_b, * outside."""
    check = verify_partition(g, p)
    if not check:
        raise ContractViolation(f"not a valid partition: {check.describe()}")
    zeros = {v: 0 for v in g.vertices()}
    ones = {v: 0 for v in g.vertices()}
    for i, b in enumerate(p):
        for v in b.part_a:
            zeros[v] |= 1 << i
        for v in b.part_b:
            ones[v] |= 1 << i
    return Addressing(
        {v: AddressString(p.r, zeros[v], ones[v]) for v in g.vertices()}
    )


def addressing_to_partition(a: Addressing) -> BicliquePartition:
    """Coordinate i becomes the biclique ({v: 0 at i}, {v: 1 at i}).

    Coordinates with an empty side claim no edges and are skipped, so an
    all-joker addressing maps to the empty partition. On addressings
    induced from a valid partition this inverts the induction exactly.
    """
    bicliques = []
    for i in range(a.length):
        part_a = [v for v, x in a.strings.items() if x.zeros >> i & 1]
        part_b = [v for v, x in a.strings.items() if x.ones >> i & 1]
        if part_a and part_b:
            bicliques.append(Biclique.of(part_a, part_b))
    return BicliquePartition(bicliques)


def graham_pollak_addressing(n: int) -> Addressing:
    """The classical distance-1 addressing of the n-clique, length n-1.

    Vertex v < n reads 1 on the first v-1 coordinates, 0 on coordinate v,
    jokers after; vertex n reads all 1s. Pairwise distances are 1 and the
    volume is exactly 2^(n-1).
    """
    if n < 2:
        raise ContractViolation("clique addressing needs at least 2 vertices")
    m = n - 1
    strings = {}
    for v in range(1, n):
        ones = (1 << (v - 1)) - 1
        strings[v] = AddressString(m, 1 << (v - 1), ones)
    strings[n] = AddressString(m, 0, (1 << m) - 1)
    return Addressing(strings)


def has_zero_coordinate(a: Addressing, vertices: Iterable[int]) -> bool:
    """True iff every given vertex's string has at least one 0."""
    return all(a[v].zeros != 0 for v in vertices)


# -- serialization ------------------------------------------------------------


def format_addressing(a: Addressing) -> str:
    """One line per vertex: '<v> <string>'."""
    lines = [f"{v} {a[v]}" for v in a]
    return "\n".join(lines) + ("\n" if lines else "")


def parse_addressing(text: str) -> Addressing:
    strings: dict[int, AddressString] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if len(fields) == 1:
            fields.append("")  # length-0 addressing (empty partition)
        if len(fields) != 2:
            raise FormatError("expected '<vertex> <string>'", lineno)
        try:
            v = int(fields[0])
        except ValueError:
            raise FormatError("vertex must be an integer", lineno) from None
        if v in strings:
            raise FormatError(f"vertex {v} addressed twice", lineno)
        if not set(fields[1]) <= _ALPHABET:
            raise FormatError("string symbols must be 0, 1 or *", lineno)
        strings[v] = AddressString.from_text(fields[1])
    try:
        return Addressing(strings)
    except ContractViolation as exc:
        raise FormatError(str(exc)) from None
