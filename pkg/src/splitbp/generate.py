"""Seeded, reproducible instance generators for the test corpora.

Randomness comes from splitmix64 (Steele, Lea & Flood's published 64-bit
mixing generator), implemented here so that corpora are reproducible
byte-for-byte across platforms and languages; the platform RNG is never
used. Cross edges of random split graphs are sampled in (k, s)
lexicographic order, one draw per pair, so equal seeds give equal graphs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractViolation
from .graph import Graph, complete_graph
from .splits import SplitPartition, classify

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """splitmix64: state advances by the golden-gamma, output is mixed.

    Reference sequence from seed 0: 0xE220A8397B1DCDAF,
    0x6E789E6AA1B965F4, 0x06C45D188009454F, ...
    """

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def bernoulli(self, p: float) -> bool:
        """True with probability p: draw < floor(p * 2^64)."""
        if p >= 1.0:
            return True
        return self.next_u64() < int(p * 2.0**64)


@dataclass(frozen=True)
class GenSpec:
    """What to generate.

    kind "split" uses k_size, s_size, edge_prob and seed; the shape kinds
    (complete, path, cycle, star) use n and are fully deterministic.
    """

    kind: str
    n: int = 0
    k_size: int = 0
    s_size: int = 0
    edge_prob: float = 0.5
    seed: int = 0


@dataclass(frozen=True)
class GeneratedInstance:
    graph: Graph
    split: SplitPartition | None = None


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ContractViolation("path needs at least one vertex")
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ContractViolation("cycle needs at least three vertices")
    return Graph(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def star_graph(n: int) -> Graph:
    """Star with center 1 and n-1 leaves."""
    if n < 2:
        raise ContractViolation("star needs at least two vertices")
    return Graph(n, [(1, v) for v in range(2, n + 1)])


def random_split_graph(
    k_size: int, s_size: int, edge_prob: float, seed: int
) -> tuple[Graph, SplitPartition]:
    """Clique on 1..k_size, independent set after, random cross edges.

    The returned partition is the intended (K, S) classified honestly:
    its class is recomputed from the sampled graph, never assumed.
    """
    if k_size < 1 or s_size < 1:
        raise ContractViolation("split generator needs k_size >= 1 and s_size >= 1")
    if not 0.0 <= edge_prob <= 1.0:
        raise ContractViolation("edge_prob must lie in [0, 1]")
    rng = SplitMix64(seed)
    n = k_size + s_size
    edges = [(a, b) for a in range(1, k_size + 1) for b in range(a + 1, k_size + 1)]
    for k in range(1, k_size + 1):
        for s in range(k_size + 1, n + 1):
            if rng.bernoulli(edge_prob):
                edges.append((k, s))
    g = Graph(n, edges)
    intended = classify(g, set(range(1, k_size + 1)), set(range(k_size + 1, n + 1)))
    return g, intended


def generate(spec: GenSpec) -> GeneratedInstance:
    if spec.kind == "split":
        g, part = random_split_graph(
            spec.k_size, spec.s_size, spec.edge_prob, spec.seed
        )
        return GeneratedInstance(g, part)
    if spec.kind == "complete":
        return GeneratedInstance(complete_graph(spec.n))
    if spec.kind == "path":
        return GeneratedInstance(path_graph(spec.n))
    if spec.kind == "cycle":
        return GeneratedInstance(cycle_graph(spec.n))
    if spec.kind == "star":
        return GeneratedInstance(star_graph(spec.n))
    raise ContractViolation(f"unknown generator kind {spec.kind!r}")
