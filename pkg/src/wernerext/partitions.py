"""Integer partitions with at most ``d`` rows, viewed as SU(d) Young diagrams.

Every :class:`Partition` is stored zero-padded to exactly ``d`` rows, so
reversal, duals and prefix sums never need index juggling.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import Iterator, Sequence


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing row lengths, padded with zeros to ``d`` entries."""

    rows: tuple[int, ...]
    d: int

    def __init__(self, rows: Sequence[int], d: int | None = None):
        rows = tuple(int(r) for r in rows)
        if d is None:
            d = len(rows)
        if d < 1:
            raise ValueError(f"ambient row count must be positive, got {d}")
        nonzero = len(rows)
        while nonzero and rows[nonzero - 1] == 0:
            nonzero -= 1
        if nonzero > d:
            raise ValueError(f"{rows} has more than {d} nonzero rows")
        rows = rows[:nonzero] + (0,) * (d - nonzero)
        if any(r < 0 for r in rows):
            raise ValueError(f"negative row length in {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"rows {rows} are not weakly decreasing")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "d", d)

    @classmethod
    def parse(cls, text: str, d: int) -> "Partition":
        """Parse a comma-separated literal such as ``"3,1"``.

        Errors name the offending position (1-based field index).
        """
        text = text.strip()
        if not text:
            return cls((), d)
        values = []
        for pos, field in enumerate(text.split(","), start=1):
            field = field.strip()
            try:
                value = int(field)
            except ValueError:
                raise ValueError(
                    f"partition literal {text!r}: field {pos} ({field!r}) is not an integer"
                ) from None
            if value < 0:
                raise ValueError(f"partition literal {text!r}: field {pos} is negative")
            if values and value > values[-1]:
                raise ValueError(
                    f"partition literal {text!r}: field {pos} ({value}) exceeds "
                    f"the previous row ({values[-1]})"
                )
            values.append(value)
        return cls(values, d)

    @property
    def n(self) -> int:
        return sum(self.rows)

    @property
    def length(self) -> int:
        """Number of nonzero rows."""
        return sum(1 for r in self.rows if r)

    def __iter__(self) -> Iterator[int]:
        return iter(self.rows)

    def __getitem__(self, i):
        return self.rows[i]

    def __len__(self) -> int:
        return self.d

    def __str__(self) -> str:
        return "(" + ",".join(str(r) for r in self.rows[: self.length]) + ")"

    def to_json(self) -> list[int]:
        return list(self.rows)


@dataclass(frozen=True)
class PartitionPair:
    left: Partition
    right: Partition

    def __post_init__(self):
        if self.left.d != self.right.d:
            raise ValueError(
                f"ambient rows differ: left has d={self.left.d}, right has d={self.right.d}"
            )

    @property
    def d(self) -> int:
        return self.left.d

    def __iter__(self):
        yield self.left
        yield self.right


@dataclass(frozen=True)
class OverlapProfile:
    """Row bookkeeping of ``left`` against the reversal of ``right``.

    ``spare`` counts rows that are empty in both, so that
    ``d_left + d_right + d_overlap + spare == d``.
    """

    d_left: int
    d_right: int
    d_overlap: int
    n_left: int
    n_right: int
    spare: int


def weight(p: Partition) -> int:
    return p.n


def _check_same_d(a: Partition, b: Partition) -> None:
    if a.d != b.d:
        raise ValueError(f"ambient rows differ: {a.d} vs {b.d}")


def _check_same_weight(a: Partition, b: Partition) -> None:
    _check_same_d(a, b)
    if a.n != b.n:
        raise ValueError(f"weights differ: {a} has {a.n} boxes, {b} has {b.n}")


def _decreasing(n: int, parts: int, cap: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if n == 0:
            yield ()
        return
    for first in range(min(n, cap), -1, -1):
        if first * parts < n:
            break
        for rest in _decreasing(n - first, parts - 1, first):
            yield (first,) + rest


def enumerate_partitions(n: int, d: int) -> list[Partition]:
    """All partitions of ``n`` into at most ``d`` parts, lexicographically decreasing."""
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return [Partition(rows, d) for rows in _decreasing(n, d, n)]


def dominates(a: Partition, b: Partition) -> bool:
    """``a`` dominates ``b``: every prefix sum of ``a`` is at least that of ``b``."""
    _check_same_weight(a, b)
    return all(x >= y for x, y in zip(accumulate(a.rows), accumulate(b.rows)))


def cover_indices(a: Partition, b: Partition) -> tuple[int, int] | None:
    """Return 1-based ``(i, k)`` if ``a`` covers ``b``, else ``None``.

    ``a`` covers ``b`` iff ``a`` is ``b`` with one box moved from row ``k`` up
    to row ``i < k``, where either ``k == i + 1`` or rows ``i..k`` of ``b`` all
    have the same length.
    """
    _check_same_weight(a, b)
    diff = [x - y for x, y in zip(a.rows, b.rows)]
    up = [j for j, v in enumerate(diff) if v != 0]
    if len(up) != 2:
        return None
    i, k = up
    if diff[i] != 1 or diff[k] != -1:
        return None
    if k == i + 1 or b.rows[i] == b.rows[k]:
        return i + 1, k + 1
    return None


def covers(a: Partition, b: Partition) -> bool:
    return cover_indices(a, b) is not None


def equivalent_labels(a: Partition, b: Partition) -> bool:
    """Same SU(d) irrep: the diagrams differ only by full height-``d`` columns."""
    _check_same_d(a, b)
    shifts = {x - y for x, y in zip(a.rows, b.rows)}
    return len(shifts) == 1


def reverse(p: Partition) -> tuple[int, ...]:
    return p.rows[::-1]


def dual(p: Partition, m: int) -> Partition:
    """Complement of ``p`` in the ``d x m`` rectangle, rotated by pi."""
    if m < p.rows[0]:
        raise ValueError(f"dual width {m} is smaller than the first row of {p}")
    return Partition([m - r for r in reversed(p.rows)], p.d)


def sorted_row_sum(a: Partition, b: Partition) -> Partition:
    """Rows of ``a`` plus the rows of ``b`` upside down, sorted decreasingly."""
    _check_same_d(a, b)
    return Partition(sorted((x + y for x, y in zip(a.rows, reverse(b))), reverse=True), a.d)


def difference_partition(big: Partition, small: Partition) -> Partition:
    """Sorted pointwise difference ``big - small``; requires row containment."""
    _check_same_d(big, small)
    if any(s > b for b, s in zip(big.rows, small.rows)):
        raise ValueError(f"{small} is not contained in {big}")
    return Partition(sorted((b - s for b, s in zip(big.rows, small.rows)), reverse=True), big.d)


def near_rectangular(n: int, rows: int, d: int) -> Partition:
    """Dominance-least partition of ``n`` into at most ``rows`` parts, padded to ``d``.

    ``n % rows`` rows of ``ceil(n / rows)`` followed by rows of ``floor(n / rows)``.
    """
    if rows < 0 or rows > d:
        raise ValueError(f"row count {rows} outside [0, {d}]")
    if rows == 0:
        if n:
            raise ValueError(f"cannot place {n} boxes in zero rows")
        return Partition((), d)
    q, r = divmod(n, rows)
    return Partition([q + 1] * r + [q] * (rows - r), d)


def overlap_profile(pair: PartitionPair) -> OverlapProfile:
    left, right = pair
    d = pair.d
    rev = reverse(right)
    d_overlap = sum(1 for x, y in zip(left.rows, rev) if x and y)
    d_left = sum(1 for x, y in zip(left.rows, rev) if x and not y)
    d_right = sum(1 for x, y in zip(left.rows, rev) if y and not x)
    return OverlapProfile(
        d_left=d_left,
        d_right=d_right,
        d_overlap=d_overlap,
        n_left=sum(left.rows[:d_left]),
        n_right=sum(right.rows[:d_right]),
        spare=d - d_left - d_right - d_overlap,
    )
