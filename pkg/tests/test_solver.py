import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from splitbp import (
    Graph,
    HAVE_COMPILED_KERNEL,
    LimitExceeded,
    NotSplitError,
    SplitClass,
    bp_exact,
    bp_split,
    check_theorem,
    complete_graph,
    cycle_graph,
    greedy_star_partition,
    maximal_cliques,
    path_graph,
    random_split_graph,
    recognize_split,
    star_graph,
    verify_partition,
)

from .oracles import brute_force_bp

needs_compiled = pytest.mark.skipif(
    not HAVE_COMPILED_KERNEL, reason="compiled kernel not built"
)


def small_graphs(max_n=7, max_edges=10):
    @st.composite
    def build(draw):
        n = draw(st.integers(min_value=1, max_value=max_n))
        pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
        picks = draw(
            st.lists(st.sampled_from(pairs), unique=True, max_size=max_edges)
            if pairs
            else st.just([])
        )
        return Graph(n, picks)

    return build()


class TestKnownValues:
    def test_p3_single_star(self):
        assert bp_exact(path_graph(3)).optimum == 1

    def test_c5(self):
        # frozen from the edge-set partition enumeration oracle
        result = bp_exact(cycle_graph(5))
        assert result.optimum == 3
        assert result.proven_optimal
        assert brute_force_bp(cycle_graph(5).edges()) == 3

    @pytest.mark.parametrize("n", range(2, 7))
    def test_complete_graphs(self, n):
        result = bp_exact(complete_graph(n))
        assert result.optimum == n - 1
        assert result.proven_optimal
        assert result.witness.r == n - 1

    def test_edgeless(self):
        result = bp_exact(Graph(4, []))
        assert result.optimum == 0
        assert result.proven_optimal

    @settings(max_examples=60, deadline=None)
    @given(small_graphs(max_n=6, max_edges=7))
    def test_matches_partition_enumeration_oracle(self, g):
        assert bp_exact(g).optimum == brute_force_bp(g.edges())


class TestWitness:
    @settings(max_examples=60, deadline=None)
    @given(small_graphs())
    def test_witness_verifies_at_optimum_size(self, g):
        result = bp_exact(g)
        assert result.witness.r == result.optimum
        assert verify_partition(g, result.witness)

    def test_deterministic_across_runs(self):
        g = cycle_graph(6)
        first = bp_exact(g)
        second = bp_exact(g)
        assert first.optimum == second.optimum
        assert first.witness == second.witness
        assert first.nodes_explored == second.nodes_explored


class TestInvariants:
    @settings(max_examples=40, deadline=None)
    @given(small_graphs(max_n=6, max_edges=9), st.randoms(use_true_random=False))
    def test_relabeling_invariance(self, g, rnd):
        perm = list(g.vertices())
        rnd.shuffle(perm)
        relabeled = Graph(g.n, [(perm[u - 1], perm[v - 1]) for u, v in g.edges()])
        assert bp_exact(relabeled).optimum == bp_exact(g).optimum

    @settings(max_examples=40, deadline=None)
    @given(small_graphs(max_n=9, max_edges=12))
    def test_lower_bound_from_clique_number(self, g):
        omega = max((len(c) for c in maximal_cliques(g)), default=0)
        assert bp_exact(g).optimum >= omega - 1

    @settings(max_examples=60, deadline=None)
    @given(
        st.builds(
            random_split_graph,
            st.integers(min_value=1, max_value=4),
            st.integers(min_value=1, max_value=3),
            st.sampled_from([0.2, 0.5, 0.8]),
            st.integers(min_value=0, max_value=2**32),
        )
    )
    def test_split_graph_optimum_by_class(self, inst):
        g, _ = inst
        p = recognize_split(g)
        optimum = bp_exact(g).optimum
        if p.split_class is SplitClass.BALANCED:
            assert optimum == p.omega
        else:
            assert optimum == p.omega - 1


class TestKernels:
    @needs_compiled
    @settings(max_examples=40, deadline=None)
    @given(small_graphs(max_n=6, max_edges=10))
    def test_compiled_matches_python(self, g):
        a = bp_exact(g, kernel="python")
        b = bp_exact(g, kernel="compiled")
        assert a.optimum == b.optimum
        assert a.witness == b.witness
        assert a.nodes_explored == b.nodes_explored

    @needs_compiled
    @pytest.mark.parametrize(
        "g",
        [
            complete_graph(6),
            cycle_graph(7),
            random_split_graph(5, 4, 0.8, 2)[0],
            random_split_graph(4, 4, 0.2, 3)[0],
        ],
        ids=["K6", "C7", "split-dense", "split-sparse"],
    )
    def test_kernel_parity_on_fixed_corpus(self, g):
        a = bp_exact(g, kernel="python")
        b = bp_exact(g, kernel="compiled")
        assert (a.optimum, a.witness, a.nodes_explored) == (
            b.optimum,
            b.witness,
            b.nodes_explored,
        )

    @needs_compiled
    def test_auto_prefers_compiled(self):
        assert bp_exact(complete_graph(4)).kernel == "compiled"

    def test_python_kernel_handles_many_vertices(self):
        # 70 vertices exceeds the compiled kernel's 64-vertex masks
        g = Graph(70, [(2 * i + 1, 2 * i + 2) for i in range(35)])
        result = bp_exact(g)
        assert result.kernel == "python"
        assert result.optimum == 35

    def test_unknown_kernel(self):
        with pytest.raises(ValueError):
            bp_exact(path_graph(3), kernel="gpu")


class TestBudgets:
    def test_node_budget_keeps_upper_bound(self):
        g = complete_graph(6)
        result = bp_exact(g, node_budget=1)
        assert not result.proven_optimal
        assert result.optimum == 5  # the star-construction incumbent
        assert verify_partition(g, result.witness)

    def test_node_budget_is_deterministic(self):
        g = complete_graph(6)
        a = bp_exact(g, node_budget=100)
        b = bp_exact(g, node_budget=100)
        assert a.optimum == b.optimum
        assert a.nodes_explored == b.nodes_explored

    def test_edge_limit(self):
        with pytest.raises(LimitExceeded):
            bp_exact(complete_graph(11))  # 55 edges > default 45
        assert bp_exact(complete_graph(7), edge_limit=21).optimum == 6


class TestGreedyStars:
    @settings(max_examples=60, deadline=None)
    @given(small_graphs())
    def test_greedy_cover_is_valid(self, g):
        assert verify_partition(g, greedy_star_partition(g))


class TestCheckTheorem:
    def test_p4(self):
        report = check_theorem(Graph(4, [(1, 3), (1, 2), (2, 4)]))
        assert (report.exact, report.closed_form, report.mc_minus_1) == (2, 2, 2)
        assert report.passed

    def test_star(self):
        report = check_theorem(star_graph(4))
        assert (report.exact, report.closed_form, report.mc_minus_1) == (1, 1, 1)
        assert report.passed

    def test_k5(self):
        report = check_theorem(complete_graph(5))
        assert (report.exact, report.closed_form, report.mc_minus_1) == (4, 4, 4)
        assert report.passed

    def test_not_split_rejected(self):
        with pytest.raises(NotSplitError):
            check_theorem(cycle_graph(5))

    def test_consistent_with_bp_split(self):
        g, _ = random_split_graph(4, 3, 0.5, 7)
        report = check_theorem(g)
        assert report.passed
        assert report.closed_form == bp_split(g).value
