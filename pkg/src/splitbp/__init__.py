"""Exact biclique partition numbers of split graphs.

For a split graph the minimum number of bicliques partitioning the edge
set equals the number of maximal cliques of the complement minus one.
This package computes that closed form with explicit optimal witnesses,
realizes the correspondence between biclique partitions and squashed-cube
addressings, and validates everything against an exhaustive
branch-and-bound solver on small instances.
"""

from .addressing import (
    Addressing,
    AddressString,
    addressing_to_partition,
    covered_strings,
    distance,
    format_addressing,
    graham_pollak_addressing,
    has_zero_coordinate,
    is_one_neighborly,
    parse_addressing,
    partition_to_addressing,
    volume,
)
from .errors import (
    ContractViolation,
    FormatError,
    LimitExceeded,
    NotSplitError,
)
from .generate import (
    GenSpec,
    GeneratedInstance,
    SplitMix64,
    cycle_graph,
    generate,
    path_graph,
    random_split_graph,
    star_graph,
)
from .graph import Graph, complete_graph, format_graph, parse_graph
from .partition import (
    Biclique,
    BicliquePartition,
    SplitBp,
    bp_split,
    format_partition,
    parse_partition,
    parts_contained_in,
    star_partition_balanced,
    star_partition_unbalanced,
    stars_centered_in,
    verify_partition,
)
from .solver import (
    HAVE_COMPILED_KERNEL,
    SolverResult,
    TheoremReport,
    bp_exact,
    check_theorem,
    greedy_star_partition,
)
from .splits import (
    SplitClass,
    SplitPartition,
    as_s_max,
    classify,
    maximal_cliques,
    mc_complement,
    recognize_split,
)

__version__ = "0.1.0"
