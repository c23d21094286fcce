"""Littlewood-Richardson products of SU(d) irreps.

Decompositions are computed by enumerating LR tableaux: the boxes of the
right factor are attached row by row as horizontal strips labelled 1, 2, ...,
subject to the lattice-word condition. Shapes with more than ``d`` rows are
never generated, which is the SU(d) truncation of the GL expansion.
"""

from __future__ import annotations

import json
from collections import Counter
from collections.abc import Mapping
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .partitions import (
    Partition,
    difference_partition,
    dominates,
    dual,
    equivalent_labels,
    sorted_row_sum,
)


class LRDecomposition(Mapping):
    """Irreducible constituents of a product with their multiplicities.

    Missing keys have multiplicity zero.
    """

    def __init__(self, entries: Mapping[Partition, int]):
        self._entries = {k: int(v) for k, v in entries.items() if v > 0}

    def __getitem__(self, key: Partition) -> int:
        return self._entries.get(key, 0)

    def __contains__(self, key) -> bool:
        return key in self._entries

    def __iter__(self) -> Iterator[Partition]:
        return iter(sorted(self._entries, key=lambda p: p.rows, reverse=True))

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other) -> bool:
        if isinstance(other, LRDecomposition):
            return self._entries == other._entries
        return NotImplemented

    def __repr__(self) -> str:
        body = ", ".join(f"{p}: {m}" for p, m in self.items())
        return f"LRDecomposition({{{body}}})"

    def minimum(self) -> Partition | None:
        """The key dominated by every other key, if one exists."""
        keys = list(self)
        for cand in keys:
            if all(dominates(other, cand) for other in keys):
                return cand
        return None

    def to_json(self) -> str:
        return json.dumps({json.dumps(p.to_json()).replace(" ", ""): m for p, m in self.items()})


def _horizontal_strips(
    shape: tuple[int, ...], boxes: int, previous: tuple[int, ...] | None
) -> Iterator[tuple[int, ...]]:
    """Ways to add ``boxes`` boxes with one label as a horizontal strip.

    Yields per-row counts. ``previous`` holds the per-row counts of the
    preceding label; the running count of the new label through row ``r``
    may not exceed the count of the preceding label strictly above row ``r``.
    """
    d = len(shape)
    added = [0] * d

    def rec(r: int, left: int, placed: int, prev_above: int):
        if left == 0:
            yield tuple(added)
            return
        if r == d:
            return
        cap = left if r == 0 else min(left, shape[r - 1] - shape[r])
        if previous is not None:
            cap = min(cap, prev_above - placed)
        next_prev = prev_above + (previous[r] if previous is not None else 0)
        for a in range(cap, -1, -1):
            added[r] = a
            yield from rec(r + 1, left - a, placed + a, next_prev)
        added[r] = 0

    yield from rec(0, boxes, 0, 0)


@lru_cache(maxsize=None)
def _lr_counts(left: Partition, right: Partition) -> tuple[tuple[tuple[int, ...], int], ...]:
    states: Counter = Counter({(left.rows, None): 1})
    for boxes in right.rows:
        if boxes == 0:
            break
        nxt: Counter = Counter()
        for (shape, previous), mult in states.items():
            for strip in _horizontal_strips(shape, boxes, previous):
                new_shape = tuple(s + a for s, a in zip(shape, strip))
                nxt[(new_shape, strip)] += mult
        states = nxt
    totals: Counter = Counter()
    for (shape, _), mult in states.items():
        totals[shape] += mult
    return tuple(sorted(totals.items(), reverse=True))


def lr_decompose(left: Partition, right: Partition) -> LRDecomposition:
    """Decompose ``left (x) right`` for SU(d) by LR-tableau enumeration."""
    if left.d != right.d:
        raise ValueError(f"ambient rows differ: {left.d} vs {right.d}")
    d = left.d
    return LRDecomposition({Partition(shape, d): m for shape, m in _lr_counts(left, right)})


def multiplicity(left: Partition, right: Partition, big: Partition) -> int:
    if big.n != left.n + right.n:
        return 0
    return lr_decompose(left, right)[big]


def weyl_dimension(p: Partition) -> int:
    """Dimension of the SU(d) irrep labelled by ``p``."""
    num = Fraction(1)
    for i, j in combinations(range(p.d), 2):
        num *= Fraction(p[i] - p[j] + j - i, j - i)
    assert num.denominator == 1
    return int(num)


def min_product_diagram(left: Partition, right: Partition) -> Partition:
    """Dominance-least constituent of ``left (x) right``."""
    return sorted_row_sum(left, right)


def min_right_factor(big: Partition, left: Partition) -> Partition:
    """Dominance-least ``right`` such that ``big`` occurs in ``left (x) right``."""
    return difference_partition(big, left)


def dual_symmetry_sides(
    left: Partition, right: Partition, big: Partition, m: int | None = None
) -> tuple[int, int]:
    """Multiplicities ``m(left, right, big)`` and ``m(left, dual(big), dual(right))``.

    Both duals use the same width ``m`` (default: the smallest valid one). The
    second multiplicity is read off modulo full columns.
    """
    if m is None:
        m = max(big.rows[0], right.rows[0])
    if m < big.rows[0] or m < right.rows[0]:
        raise ValueError(f"dual width {m} too small for {big} and {right}")
    direct = multiplicity(left, right, big)
    target = dual(right, m)
    swapped = lr_decompose(left, dual(big, m))
    crossed = sum(mult for p, mult in swapped.items() if equivalent_labels(p, target))
    return direct, crossed


def check_dual_symmetry(
    left: Partition, right: Partition, big: Partition, m: int | None = None
) -> bool:
    direct, crossed = dual_symmetry_sides(left, right, big, m)
    return direct == crossed
