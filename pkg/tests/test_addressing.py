import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from splitbp import (
    Addressing,
    AddressString,
    Biclique,
    BicliquePartition,
    ContractViolation,
    FormatError,
    Graph,
    LimitExceeded,
    addressing_to_partition,
    bp_split,
    complete_graph,
    covered_strings,
    distance,
    format_addressing,
    graham_pollak_addressing,
    has_zero_coordinate,
    is_one_neighborly,
    parse_addressing,
    partition_to_addressing,
    random_split_graph,
    recognize_split,
    volume,
)

P4 = Graph(4, [(1, 3), (1, 2), (2, 4)])


def s(text: str) -> AddressString:
    return AddressString.from_text(text)


class TestAddressString:
    def test_text_round_trip(self):
        for text in ["01*", "", "***", "101", "*0"]:
            assert str(s(text)) == text

    def test_joker_count_and_subcube(self):
        x = s("0**1*")
        assert x.joker_count == 3
        assert x.subcube_size == 8

    def test_invalid_symbol(self):
        with pytest.raises(ContractViolation):
            s("01x")

    def test_resolutions(self):
        # coordinate i is bit i-1; "0*" resolves jokers both ways
        assert sorted(s("0*").resolutions()) == [0b00, 0b10]
        assert list(s("10").resolutions()) == [0b01]
        assert sorted(s("**").resolutions()) == [0, 1, 2, 3]


class TestDistance:
    def test_jokers_absorb(self):
        assert distance(s("01*"), s("0*1")) == 0

    def test_opposite_bits(self):
        assert distance(s("0"), s("1")) == 1

    def test_all_opposite(self):
        assert distance(s("010"), s("101")) == 3

    def test_length_mismatch(self):
        with pytest.raises(ContractViolation):
            distance(s("01"), s("0"))


class TestVolume:
    def test_full_square(self):
        assert volume([s("**")]) == 4

    def test_k3_addressing(self):
        assert volume([s("0*"), s("10"), s("11")]) == 4

    def test_empty(self):
        assert volume([]) == 0

    def test_mixed_lengths(self):
        with pytest.raises(ContractViolation):
            volume([s("0"), s("01")])

    def test_formula_length_limit(self):
        with pytest.raises(LimitExceeded):
            volume([AddressString(63, 0, 0)])

    def test_enumeration_length_limit(self):
        with pytest.raises(LimitExceeded):
            covered_strings([AddressString(18, 0, 0)])

    @settings(max_examples=50)
    @given(st.integers(min_value=2, max_value=12))
    def test_one_neighborly_volume_equals_union(self, n):
        family = graham_pollak_addressing(n).family()
        assert is_one_neighborly(family)
        assert len(covered_strings(family)) == volume(family)


class TestOneNeighborly:
    def test_k3_family(self):
        assert is_one_neighborly([s("0*"), s("10"), s("11")])

    def test_joker_overlap_fails(self):
        assert not is_one_neighborly([s("0*"), s("1*"), s("**")])

    def test_singleton_vacuous(self):
        assert is_one_neighborly([s("0*")])


class TestPartitionToAddressing:
    def test_k3_by_rule(self):
        p = BicliquePartition([Biclique.of([1], [2, 3]), Biclique.of([2], [3])])
        a = partition_to_addressing(complete_graph(3), p)
        assert str(a[1]) == "0*"
        assert str(a[2]) == "10"
        assert str(a[3]) == "11"

    def test_single_edge(self):
        g = Graph(2, [(1, 2)])
        a = partition_to_addressing(g, BicliquePartition([Biclique.of([1], [2])]))
        assert (str(a[1]), str(a[2])) == ("0", "1")

    def test_invalid_partition_rejected(self):
        p = BicliquePartition([Biclique.of([1], [2])])
        with pytest.raises(ContractViolation):
            partition_to_addressing(complete_graph(3), p)

    def test_independent_side_reads_one_or_joker(self):
        part = recognize_split(P4)
        a = partition_to_addressing(P4, bp_split(P4).witness)
        for v in part.independent_side:
            assert a[v].zeros == 0

    def test_edge_distance_at_least_one(self):
        a = partition_to_addressing(P4, bp_split(P4).witness)
        for u, v in P4.edges():
            assert distance(a[u], a[v]) >= 1


class TestAddressingToPartition:
    def test_single_coordinate(self):
        a = Addressing({1: s("0"), 2: s("1")})
        assert addressing_to_partition(a) == BicliquePartition(
            [Biclique.of([1], [2])]
        )

    def test_gp3_gives_k3_stars(self):
        p = addressing_to_partition(graham_pollak_addressing(3))
        assert p == BicliquePartition(
            [Biclique.of([1], [2, 3]), Biclique.of([2], [3])]
        )
        assert bool(p)

    def test_all_jokers_empty_partition(self):
        a = Addressing({1: s("**"), 2: s("**")})
        assert addressing_to_partition(a) == BicliquePartition([])

    @settings(max_examples=100)
    @given(
        st.builds(
            random_split_graph,
            st.integers(min_value=1, max_value=5),
            st.integers(min_value=1, max_value=4),
            st.sampled_from([0.2, 0.5, 0.8]),
            st.integers(min_value=0, max_value=2**32),
        )
    )
    def test_round_trip_on_split_witnesses(self, inst):
        g, _ = inst
        p = bp_split(g).witness
        back = addressing_to_partition(partition_to_addressing(g, p))
        assert back == p

    @pytest.mark.parametrize("n", range(2, 9))
    def test_round_trip_on_clique_addressings(self, n):
        a = graham_pollak_addressing(n)
        p = addressing_to_partition(a)
        g = complete_graph(n)
        from splitbp import verify_partition

        assert verify_partition(g, p)
        assert partition_to_addressing(g, p).strings == a.strings


class TestGrahamPollakAddressing:
    def test_n2(self):
        a = graham_pollak_addressing(2)
        assert (str(a[1]), str(a[2])) == ("0", "1")
        assert volume(a.family()) == 2

    def test_n3(self):
        a = graham_pollak_addressing(3)
        assert [str(a[v]) for v in (1, 2, 3)] == ["0*", "10", "11"]

    def test_n5_volume(self):
        assert volume(graham_pollak_addressing(5).family()) == 16

    def test_too_small(self):
        with pytest.raises(ContractViolation):
            graham_pollak_addressing(1)

    @pytest.mark.parametrize("n", range(2, 21))
    def test_identities_by_formula(self, n):
        a = graham_pollak_addressing(n)
        assert a.length == n - 1
        assert is_one_neighborly(a.family())
        assert volume(a.family()) == 2 ** (n - 1)


class TestHasZeroCoordinate:
    def test_p4_clique_side(self):
        a = partition_to_addressing(P4, bp_split(P4).witness)
        assert has_zero_coordinate(a, {1, 2})

    def test_counterexample(self):
        a = Addressing({1: s("1*"), 2: s("*1")})
        assert not has_zero_coordinate(a, {1, 2})

    def test_empty_vacuous(self):
        a = Addressing({1: s("1*")})
        assert has_zero_coordinate(a, set())


class TestSerialization:
    def test_format(self):
        a = graham_pollak_addressing(3)
        assert format_addressing(a) == "1 0*\n2 10\n3 11\n"

    def test_round_trip(self):
        a = partition_to_addressing(P4, bp_split(P4).witness)
        parsed = parse_addressing(format_addressing(a))
        assert parsed.strings == a.strings

    def test_length_zero_round_trip(self):
        # an edgeless graph induces the empty partition and length-0 strings
        g = Graph(2, [])
        a = partition_to_addressing(g, BicliquePartition([]))
        assert a.length == 0
        parsed = parse_addressing(format_addressing(a))
        assert parsed.strings == a.strings

    def test_parse_errors(self):
        with pytest.raises(FormatError, match="line 1"):
            parse_addressing("1 0* extra\n")
        with pytest.raises(FormatError, match="line 2.*twice"):
            parse_addressing("1 0*\n1 11\n")
        with pytest.raises(FormatError, match="symbols"):
            parse_addressing("1 0x\n")
        with pytest.raises(FormatError, match="length"):
            parse_addressing("1 0*\n2 110\n")
