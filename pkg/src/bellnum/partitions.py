"""Brute-force set-partition oracle.

Set partitions of ``{1..n}`` are enumerated through their restricted
growth strings (``a_1 = 0`` and each later code at most one above the
running maximum), visited in lexicographic code order so output is
deterministic.  Everything counted here is counted by sheer exhaustion,
independent of any recurrence, which is exactly what makes it a useful
oracle for the exact kernel at small n.

Caps: full enumeration up to n = 13 (about 2.8e7 visits), statistics
collection up to n = 12 where the per-partition bookkeeping dominates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .exact import PartitionShape

__all__ = [
    "ENUM_CAP",
    "STATS_CAP",
    "PartitionStats",
    "rgs_strings",
    "rgs_to_blocks",
    "enumerate_partitions",
    "collect_stats",
    "genjiko_patterns",
]

ENUM_CAP = 13
STATS_CAP = 12


@dataclass(frozen=True)
class PartitionStats:
    """Exhaustive tallies over all set partitions of an n-set.

    ``block_of_element1_size_hist[k]`` counts partitions whose block
    containing element 1 has size k (index 0 unused);
    ``singleton_count_hist[k]`` counts partitions with exactly k
    singleton blocks.
    """

    n: int
    total: int
    no_singleton_total: int
    by_shape: dict[PartitionShape, int]
    block_of_element1_size_hist: tuple[int, ...]
    singleton_count_hist: tuple[int, ...]


def rgs_strings(n: int) -> Iterator[tuple[int, ...]]:
    """Yield all restricted growth strings of length n in lex order."""
    if not 1 <= n <= ENUM_CAP:
        raise ValueError(f"n must be in 1..{ENUM_CAP}")
    codes = [0] * n

    def rec(i: int, maxc: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(codes)
            return
        for c in range(maxc + 2):
            codes[i] = c
            yield from rec(i + 1, max(maxc, c))

    yield from rec(1, 0)


def rgs_to_blocks(codes: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Blocks of positions 1..n, ordered by first appearance."""
    nblocks = max(codes) + 1
    blocks: list[list[int]] = [[] for _ in range(nblocks)]
    for pos, c in enumerate(codes, start=1):
        blocks[c].append(pos)
    return tuple(tuple(b) for b in blocks)


def enumerate_partitions(n: int, visitor: Callable[[tuple[int, ...]], None] | None = None) -> int:
    """Visit every set partition of {1..n} exactly once; return the count.

    The visitor, if given, receives the restricted growth string of each
    partition (use :func:`rgs_to_blocks` to materialize blocks).
    """
    if not 1 <= n <= ENUM_CAP:
        raise ValueError(f"n must be in 1..{ENUM_CAP}")
    count = 0
    if visitor is None:
        # counting only: no tuple construction on the hot path
        def rec_count(i: int, maxc: int) -> int:
            if i == n:
                return 1
            c = 0
            for code in range(maxc + 2):
                c += rec_count(i + 1, max(maxc, code))
            return c

        return rec_count(1, 0)
    for codes in rgs_strings(n):
        visitor(codes)
        count += 1
    return count


def collect_stats(n: int) -> PartitionStats:
    """Exhaustive statistics over all set partitions of an n-set."""
    if not 1 <= n <= STATS_CAP:
        raise ValueError(f"n must be in 1..{STATS_CAP}")
    total = 0
    no_singleton = 0
    by_sizes: dict[tuple[int, ...], int] = {}
    block1_hist = [0] * (n + 1)
    singleton_hist = [0] * (n + 1)
    sizes = [0] * (n + 1)

    def rec(i: int, nb: int) -> None:
        nonlocal total, no_singleton
        if i == n:
            total += 1
            key = tuple(sorted(sizes[:nb]))
            by_sizes[key] = by_sizes.get(key, 0) + 1
            singles = 0
            for s in key:
                if s == 1:
                    singles += 1
                else:
                    break  # key is sorted
            singleton_hist[singles] += 1
            if singles == 0:
                no_singleton += 1
            block1_hist[sizes[0]] += 1
            return
        for b in range(nb):
            sizes[b] += 1
            rec(i + 1, nb)
            sizes[b] -= 1
        sizes[nb] = 1
        rec(i + 1, nb + 1)
        sizes[nb] = 0

    sizes[0] = 1
    rec(1, 1)
    by_shape = {
        PartitionShape.from_block_sizes(key): cnt for key, cnt in by_sizes.items()
    }
    return PartitionStats(
        n=n,
        total=total,
        no_singleton_total=no_singleton,
        by_shape=by_shape,
        block_of_element1_size_hist=tuple(block1_hist),
        singleton_count_hist=tuple(singleton_hist),
    )


def genjiko_patterns() -> list[tuple[tuple[int, ...], ...]]:
    """The 52 ways to link five incenses, i.e. all set partitions of a
    5-set, in canonical (lexicographic growth-string) order.

    Each pattern is the tuple of linked groups over positions 1..5;
    right-to-left bar drawing is the display layer's concern.
    """
    return [rgs_to_blocks(codes) for codes in rgs_strings(5)]
