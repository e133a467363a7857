"""Integer partitions, their crank and mex statistics, and exact counting.

A partition is stored as a weakly decreasing tuple of positive parts.  The
statistics of interest:

* ``omega``: number of parts equal to 1
* ``eta``: number of parts strictly greater than omega
* ``crank``: the largest part when omega = 0, otherwise eta - omega;
  the empty partition gets crank 0 by convention
* ``mex``: least positive integer that is not a part
* ``non_one_parts``: number of parts >= 2 (the k that the series module
  tracks with z)

Enumeration runs in decreasing lexicographic order and is the ground truth
that every generating-function identity in :mod:`crankmex.identities` is
checked against.  ``count_table`` tallies, for each (n, k), how many
partitions of n with k non-one parts satisfy a chosen predicate; the two
predicates offered (odd mex, nonnegative crank) produce identical tables,
which is the theorem ``verify_theorem2`` certifies by brute force.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .verdict import Verdict

__all__ = [
    "Partition",
    "CountTable",
    "enumerate_partitions",
    "count_table",
    "count_tables_both",
    "partition_count",
    "verify_theorem2",
    "verify_ramanujan",
    "verify_pentagonal",
]

STATISTICS = ("odd_mex", "nonneg_crank")


@dataclass(frozen=True)
class Partition:
    """A partition of a nonnegative integer, parts weakly decreasing."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        prev = None
        for p in self.parts:
            if p < 1:
                raise ValueError("parts must be positive")
            if prev is not None and p > prev:
                raise ValueError("parts must be weakly decreasing")
            prev = p

    def weight(self) -> int:
        """The integer being partitioned."""
        return sum(self.parts)

    @property
    def largest_part(self) -> int:
        if not self.parts:
            raise ValueError("the empty partition has no largest part")
        return self.parts[0]

    def omega(self) -> int:
        """Number of parts equal to 1."""
        return self.parts.count(1)

    def eta(self) -> int:
        """Number of parts strictly greater than omega."""
        w = self.omega()
        count = 0
        for p in self.parts:
            if p > w:
                count += 1
            else:
                break
        return count

    def crank(self) -> int:
        """Largest part if there are no ones, else eta - omega (0 if empty)."""
        if not self.parts:
            return 0
        w = self.omega()
        if w == 0:
            return self.parts[0]
        return self.eta() - w

    def mex(self) -> int:
        """Least positive integer that does not occur as a part."""
        j = 1
        for p in reversed(self.parts):
            if p > j:
                break
            if p == j:
                j += 1
        return j

    def non_one_parts(self) -> int:
        """Number of parts that are at least 2."""
        return len(self.parts) - self.omega()


def _partition_states(n: int) -> Iterator[tuple[list[int], int, int]]:
    """Yield (x, m, h) for every partition of n >= 1, largest-first.

    x is a 1-indexed working buffer whose first m entries are the parts in
    weakly decreasing order; x[1..h] are exactly the parts >= 2 whenever any
    exist (h may point at a 1 only in the degenerate n = 1 start state).
    Successive states follow decreasing lexicographic order.  The buffer is
    reused between yields, so callers must copy anything they keep.
    """
    x = [1] * (n + 1)
    x[1] = n
    m = 1
    h = 1
    yield x, m, h
    while x[1] != 1:
        if x[h] == 2:
            m += 1
            x[h] = 1
            h -= 1
        else:
            r = x[h] - 1
            t = m - h + 1
            x[h] = r
            while t >= r:
                h += 1
                x[h] = r
                t -= r
            if t == 0:
                m = h
            else:
                m = h + 1
                if t > 1:
                    h += 1
                    x[h] = t
        yield x, m, h


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """All partitions of n, in decreasing lexicographic order.

    Yields exactly partition_count(n) distinct partitions; n = 0 yields the
    empty partition.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield Partition(())
        return
    for x, m, h in _partition_states(n):
        yield Partition(tuple(x[1 : m + 1]))


@dataclass
class CountTable:
    """Counts of partitions by (weight n, number of non-one parts k).

    ``entries[n][k]`` is defined for 0 <= k <= n <= max_n.
    """

    max_n: int
    entries: list[list[int]]

    def entry(self, n: int, k: int) -> int:
        if not 0 <= n <= self.max_n:
            raise IndexError(f"n = {n} outside 0..{self.max_n}")
        if not 0 <= k <= n:
            raise IndexError(f"k = {k} outside 0..{n}")
        return self.entries[n][k]

    def row_total(self, n: int) -> int:
        if not 0 <= n <= self.max_n:
            raise IndexError(f"n = {n} outside 0..{self.max_n}")
        return sum(self.entries[n])

    def first_mismatch(self, other: "CountTable") -> tuple[int, int, int, int] | None:
        """First (n, k, self count, other count) where the tables differ."""
        if self.max_n != other.max_n:
            raise ValueError("tables cover different ranges")
        for n in range(self.max_n + 1):
            if self.entries[n] != other.entries[n]:
                for k in range(n + 1):
                    a = self.entries[n][k]
                    b = other.entries[n][k]
                    if a != b:
                        return n, k, a, b
        return None


def _count_sweep(
    max_n: int, want_mex: bool, want_crank: bool
) -> tuple[list[list[int]] | None, list[list[int]] | None]:
    """One full enumeration pass over all partitions of 0..max_n.

    Statistics are read straight off the enumerator state: with x[1..h] the
    parts >= 2 and omega trailing ones, mex is 1 when omega = 0 and is found
    by walking the small parts upward otherwise, while the crank sign needs
    only eta (the count of parts > omega) against omega.
    """
    mex_rows = [[0] * (n + 1) for n in range(max_n + 1)] if want_mex else None
    crank_rows = [[0] * (n + 1) for n in range(max_n + 1)] if want_crank else None
    # the empty partition: mex 1 (odd), crank 0 (nonnegative)
    if want_mex:
        mex_rows[0][0] = 1
    if want_crank:
        crank_rows[0][0] = 1
    for n in range(1, max_n + 1):
        mrow = mex_rows[n] if want_mex else None
        crow = crank_rows[n] if want_crank else None
        for x, m, h in _partition_states(n):
            if h and x[h] > 1:
                k = h
                omega = m - h
            else:
                k = 0
                omega = m
            if want_mex:
                if omega == 0:
                    odd = True  # mex is 1
                else:
                    j = 2
                    for i in range(k, 0, -1):
                        v = x[i]
                        if v > j:
                            break
                        if v == j:
                            j += 1
                    odd = j & 1 == 1
                if odd:
                    mrow[k] += 1
            if want_crank:
                if omega == 0:
                    nonneg = True  # crank is the largest part, >= 2 here
                else:
                    eta = 0
                    for i in range(1, k + 1):
                        if x[i] > omega:
                            eta += 1
                        else:
                            break
                    nonneg = eta >= omega
                if nonneg:
                    crow[k] += 1
    return mex_rows, crank_rows


def count_table(max_n: int, statistic: str) -> CountTable:
    """Tally partitions of every n <= max_n by k = number of non-one parts.

    ``statistic`` selects the predicate: "odd_mex" keeps partitions whose
    mex is odd, "nonneg_crank" those whose crank is >= 0.  Computed by full
    enumeration.
    """
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    if statistic not in STATISTICS:
        raise ValueError(f"unknown statistic {statistic!r}; expected one of {STATISTICS}")
    want_mex = statistic == "odd_mex"
    mex_rows, crank_rows = _count_sweep(max_n, want_mex, not want_mex)
    return CountTable(max_n, mex_rows if want_mex else crank_rows)


def count_tables_both(max_n: int) -> tuple[CountTable, CountTable]:
    """Both count tables (odd mex, nonnegative crank) from a single sweep."""
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    mex_rows, crank_rows = _count_sweep(max_n, True, True)
    return CountTable(max_n, mex_rows), CountTable(max_n, crank_rows)


def verify_theorem2(max_n: int) -> Verdict:
    """Check, entry by entry, that the odd-mex and nonneg-crank tables agree.

    The comparison covers every (n, k) with 1 <= n <= max_n and 0 <= k <= n;
    a failure reports the first differing entry with both counts.
    """
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    mex_table, crank_table = count_tables_both(max_n)
    params = {"max_n": max_n}
    for n in range(1, max_n + 1):
        if mex_table.entries[n] != crank_table.entries[n]:
            for k in range(n + 1):
                a = mex_table.entries[n][k]
                b = crank_table.entries[n][k]
                if a != b:
                    return Verdict.fail(
                        "theorem2",
                        params,
                        {"n": n, "k": k, "odd_mex": a, "nonneg_crank": b},
                    )
    return Verdict.ok("theorem2", params)


_pcache = [1]


def partition_count(n: int) -> int:
    """Number of partitions of n, by the pentagonal-number recurrence.

    Exact for any n (Python ints); results are memoized across calls.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    while len(_pcache) <= n:
        m = len(_pcache)
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = -1 if k % 2 == 0 else 1
            total += sign * _pcache[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * _pcache[m - g2]
            k += 1
        _pcache.append(total)
    return _pcache[n]


def verify_ramanujan(max_m: int) -> Verdict:
    """Check p(11m + 6) == 0 (mod 11) for 0 <= m <= max_m."""
    if max_m < 0:
        raise ValueError("max_m must be nonnegative")
    params = {"max_m": max_m}
    for m in range(max_m + 1):
        n = 11 * m + 6
        p = partition_count(n)
        if p % 11 != 0:
            return Verdict.fail(
                "ramanujan", params, {"m": m, "n": n, "p_n": p, "mod_11": p % 11}
            )
    return Verdict.ok("ramanujan", params)


def verify_pentagonal(max_n: int) -> Verdict:
    """Cross-check the pentagonal recurrence against full enumeration."""
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    params = {"max_n": max_n}
    for n in range(max_n + 1):
        counted = sum(1 for _ in enumerate_partitions(n))
        recurrence = partition_count(n)
        if counted != recurrence:
            return Verdict.fail(
                "pentagonal_vs_enumeration",
                params,
                {"n": n, "enumerated": counted, "recurrence": recurrence},
            )
    return Verdict.ok("pentagonal_vs_enumeration", params)
