"""Partition enumeration, statistics, and count tables, checked against
independent brute-force oracles."""

import random

import pytest

from crankmex import (
    CountTable,
    Partition,
    count_table,
    count_tables_both,
    enumerate_partitions,
    partition_count,
    verify_pentagonal,
    verify_ramanujan,
    verify_theorem2,
)


def naive_mex(parts):
    """Least positive integer absent from the multiset, via a set."""
    present = set(parts)
    j = 1
    while j in present:
        j += 1
    return j


def naive_crank(parts):
    """Crank from its definition, computed with plain comprehensions."""
    if not parts:
        return 0
    ones = sum(1 for p in parts if p == 1)
    if ones == 0:
        return max(parts)
    return sum(1 for p in parts if p > ones) - ones


class TestEnumeration:
    def test_partitions_of_four(self):
        got = [p.parts for p in enumerate_partitions(4)]
        assert got == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]

    def test_zero_yields_empty_partition(self):
        assert [p.parts for p in enumerate_partitions(0)] == [()]

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            list(enumerate_partitions(-1))

    def test_counts_match_recurrence(self):
        for n in range(31):
            assert sum(1 for _ in enumerate_partitions(n)) == partition_count(n)

    def test_no_duplicates(self):
        for n in range(17):
            seen = {p.parts for p in enumerate_partitions(n)}
            assert len(seen) == partition_count(n)

    def test_decreasing_lexicographic_order(self):
        for n in range(15):
            got = [p.parts for p in enumerate_partitions(n)]
            assert got == sorted(got, reverse=True)

    def test_parts_valid(self):
        for n in range(13):
            for p in enumerate_partitions(n):
                assert sum(p.parts) == n
                assert all(a >= b for a, b in zip(p.parts, p.parts[1:]))
                assert all(a >= 1 for a in p.parts)


class TestPartitionStatistics:
    def test_mex_examples(self):
        assert Partition((2, 1, 1)).mex() == 3
        assert Partition((4,)).mex() == 1
        assert Partition(()).mex() == 1
        assert Partition((3, 2, 2, 1)).mex() == 4

    def test_crank_examples(self):
        assert Partition((4,)).crank() == 4
        assert Partition((3, 1)).crank() == 0
        assert Partition((2, 1, 1)).crank() == -2
        assert Partition((1, 1, 1, 1)).crank() == -4
        assert Partition(()).crank() == 0

    def test_omega_eta(self):
        p = Partition((3, 2, 1, 1))
        assert p.omega() == 2
        assert p.eta() == 1  # only the 3 exceeds omega
        assert p.crank() == -1

    def test_largest_part(self):
        assert Partition((3, 1)).largest_part == 3
        with pytest.raises(ValueError):
            Partition(()).largest_part

    def test_validation(self):
        with pytest.raises(ValueError):
            Partition((1, 2))
        with pytest.raises(ValueError):
            Partition((2, 0))

    def test_against_naive_oracles(self):
        for n in range(15):
            for p in enumerate_partitions(n):
                assert p.mex() == naive_mex(p.parts), p
                assert p.crank() == naive_crank(p.parts), p

    def test_structural_invariants(self):
        for n in range(15):
            for p in enumerate_partitions(n):
                assert (p.mex() == 1) == (p.omega() == 0)
                assert (p.mex() >= 2) == (1 in p.parts)
                if p.omega() > 0:
                    assert p.crank() == p.eta() - p.omega()
                assert p.non_one_parts() + p.omega() == len(p.parts)


class TestPartitionCount:
    def test_known_values(self):
        assert partition_count(0) == 1
        assert partition_count(1) == 1
        assert partition_count(4) == 5
        assert partition_count(6) == 11
        assert partition_count(30) == 5604
        assert partition_count(100) == 190569292

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            partition_count(-2)

    def test_ramanujan_congruence(self):
        assert verify_ramanujan(8).passed
        for m in range(9):
            assert partition_count(11 * m + 6) % 11 == 0

    def test_pentagonal_vs_enumeration(self):
        assert verify_pentagonal(25).passed


class TestCountTable:
    def test_example_tables_at_four(self):
        for stat in ("odd_mex", "nonneg_crank"):
            t = count_table(4, stat)
            assert t.entry(4, 1) == 2
            assert t.entry(4, 2) == 1
            assert t.entry(4, 0) == 0
            assert t.entry(0, 0) == 1

    def test_bad_statistic_rejected(self):
        with pytest.raises(ValueError):
            count_table(4, "even_mex")

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            count_table(-1, "odd_mex")

    def test_entry_bounds(self):
        t = count_table(3, "odd_mex")
        with pytest.raises(IndexError):
            t.entry(4, 0)
        with pytest.raises(IndexError):
            t.entry(2, 3)

    def test_matches_naive_counting(self):
        mex_t, crank_t = count_tables_both(14)
        for n in range(15):
            mex_row = [0] * (n + 1)
            crank_row = [0] * (n + 1)
            for p in enumerate_partitions(n):
                k = p.non_one_parts()
                if p.mex() % 2 == 1:
                    mex_row[k] += 1
                if p.crank() >= 0:
                    crank_row[k] += 1
            assert mex_t.entries[n] == mex_row, n
            assert crank_t.entries[n] == crank_row, n

    def test_both_equals_single_sweeps(self):
        mex_t, crank_t = count_tables_both(16)
        assert mex_t == count_table(16, "odd_mex")
        assert crank_t == count_table(16, "nonneg_crank")

    def test_row_sums_bounded_by_p(self):
        t = count_table(18, "nonneg_crank")
        for n in range(19):
            assert t.row_total(n) <= partition_count(n)

    def test_row_sums_agree_between_statistics(self):
        mex_t, crank_t = count_tables_both(18)
        for n in range(1, 19):
            assert mex_t.row_total(n) == crank_t.row_total(n)

    def test_first_mismatch(self):
        a = CountTable(1, [[1], [0, 0]])
        b = CountTable(1, [[1], [0, 2]])
        assert a.first_mismatch(b) == (1, 1, 0, 2)
        assert a.first_mismatch(a) is None
        with pytest.raises(ValueError):
            a.first_mismatch(CountTable(0, [[1]]))


class TestTheorem2:
    def test_trivial_range(self):
        v = verify_theorem2(1)
        assert v.passed
        assert v.params == {"max_n": 1}

    def test_moderate_range(self):
        assert verify_theorem2(25).passed

    def test_bad_range_rejected(self):
        with pytest.raises(ValueError):
            verify_theorem2(0)
