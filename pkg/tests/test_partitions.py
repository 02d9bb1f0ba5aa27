"""Oracle tests: the exhaustive enumeration against the exact kernel."""

from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from bellnum import exact, partitions


class TestEnumeration:
    def test_single_element(self):
        assert partitions.enumerate_partitions(1) == 1

    def test_five_incenses(self):
        assert partitions.enumerate_partitions(5) == 52

    def test_counts_match_recurrence(self, bells):
        for n in range(1, 10):
            assert partitions.enumerate_partitions(n) == bells[n]

    def test_count_at_twelve(self, bells):
        assert partitions.enumerate_partitions(12) == bells[12] == 4213597

    def test_visitor_sees_each_once_in_lex_order(self):
        seen = []
        count = partitions.enumerate_partitions(4, seen.append)
        assert count == len(seen) == 15
        assert seen == sorted(seen)
        assert len(set(seen)) == 15
        assert seen[0] == (0, 0, 0, 0)
        assert seen[-1] == (0, 1, 2, 3)

    def test_cap_enforced(self):
        with pytest.raises(ValueError):
            partitions.enumerate_partitions(partitions.ENUM_CAP + 1)
        with pytest.raises(ValueError):
            partitions.enumerate_partitions(0)

    @given(st.integers(min_value=1, max_value=7))
    @settings(deadline=None)
    def test_growth_strings_are_restricted(self, n):
        for codes in partitions.rgs_strings(n):
            assert codes[0] == 0
            running_max = 0
            for c in codes[1:]:
                assert 0 <= c <= running_max + 1
                running_max = max(running_max, c)
            blocks = partitions.rgs_to_blocks(codes)
            assert len(blocks) == max(codes) + 1
            assert sorted(p for b in blocks for p in b) == list(range(1, n + 1))


class TestStats:
    def test_totals(self, bells, betas):
        for n in range(1, 9):
            st_ = partitions.collect_stats(n)
            assert st_.total == bells[n]
            assert st_.no_singleton_total == betas[n]

    def test_no_singleton_examples(self):
        assert partitions.collect_stats(5).no_singleton_total == 11
        assert partitions.collect_stats(6).singleton_count_hist[0] == 41

    def test_shape_counts_are_multinomial_coefficients(self):
        st_ = partitions.collect_stats(7)
        assert sum(st_.by_shape.values()) == st_.total
        for shape, count in st_.by_shape.items():
            assert count == exact.bell_polynomial_coefficient(shape)
        shape = exact.PartitionShape.from_mapping({1: 1, 2: 2})
        assert partitions.collect_stats(5).by_shape[shape] == 15

    def test_block_of_element1_histogram(self, bells):
        for n in range(1, 9):
            st_ = partitions.collect_stats(n)
            hist = st_.block_of_element1_size_hist
            assert hist[0] == 0
            assert sum(hist) == st_.total
            for k in range(1, n + 1):
                assert hist[k] == comb(n - 1, k - 1) * bells[n - k]

    def test_singleton_histogram(self, betas):
        for n in range(1, 9):
            st_ = partitions.collect_stats(n)
            hist = st_.singleton_count_hist
            assert sum(hist) == st_.total
            for k in range(n + 1):
                assert hist[k] == comb(n, k) * betas[n - k]

    def test_cap(self):
        with pytest.raises(ValueError):
            partitions.collect_stats(partitions.STATS_CAP + 1)


class TestGenjiko:
    def test_fifty_two_patterns(self):
        pats = partitions.genjiko_patterns()
        assert len(pats) == 52
        assert len(set(pats)) == 52

    def test_extreme_patterns_present(self):
        pats = partitions.genjiko_patterns()
        assert ((1, 2, 3, 4, 5),) in pats
        assert ((1,), (2,), (3,), (4,), (5,)) in pats

    def test_patterns_cover_positions(self):
        for blocks in partitions.genjiko_patterns():
            assert sorted(p for b in blocks for p in b) == [1, 2, 3, 4, 5]
