"""Extremal parameter of (n_L, n_R)-extendible Werner states.

For a pair of diagrams ``(left, right)`` the lowest eigenvalue of the flip
average over the irreps ``left (x) right`` is the triple energy, evaluated
on the dominance-least product diagram. The closed form restricts the
search to near-rectangular pairs indexed by a row split ``d_hat``; the
exhaustive scan over all partition pairs is kept as an independent check.

The near-rectangular reduction is not exact for every query: at
``d=5, n_L=n_R=5`` the overlapping pair ``(2,2,1), (2,2,1)`` reaches
``-11/25`` while the best candidate gives ``-2/5``; diagonalizing the flip
average on its balanced colour-content sector gives ``-0.44`` as well.
:func:`exhaustive_alpha` is the reference whenever the two differ.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor

from .casimir import casimir_eigenvalue, fraction_str
from .errors import BudgetExceededError, InternalConsistencyError
from .lr import min_product_diagram
from .partitions import (
    Partition,
    PartitionPair,
    enumerate_partitions,
    near_rectangular,
    overlap_profile,
    reverse,
)

DEFAULT_PAIR_BUDGET = 250_000


@dataclass(frozen=True)
class ExtendibilityQuery:
    d: int
    n_left: int
    n_right: int

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(f"local dimension must be at least 2, got {self.d}")
        if self.n_left < 1 or self.n_right < 1:
            raise ValueError(
                f"extension sizes must be positive, got ({self.n_left}, {self.n_right})"
            )


@dataclass(frozen=True)
class ExtendibilityResult:
    query: ExtendibilityQuery
    alpha: Fraction
    left: Partition
    right: Partition
    combined: Partition
    d_hat: int | None = None
    candidates: tuple[int, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "alpha": fraction_str(self.alpha),
            "alpha_float": float(self.alpha),
            "d_hat": self.d_hat,
            "left": self.left.to_json(),
            "right": self.right.to_json(),
            "combined": self.combined.to_json(),
            "candidates": list(self.candidates),
        }


def _energy_from_casimirs(left: Partition, right: Partition, combined: Partition) -> Fraction:
    nl, nr = left.n, right.n
    return (
        casimir_eigenvalue(combined) - casimir_eigenvalue(left) - casimir_eigenvalue(right)
    ) / (2 * nl * nr) + Fraction(1, left.d)


def _energy_from_rows(left: Partition, right: Partition, combined: Partition) -> Fraction:
    rev = reverse(right)
    total = 0
    for i in range(left.d):
        total += left[i] * rev[i] - (i + 1) * (combined[i] - left[i] - right[i])
    return Fraction(total, left.n * right.n)


def triple_energy(left: Partition, right: Partition) -> Fraction:
    """Flip-average eigenvalue on the dominance-least constituent of ``left (x) right``.

    Computed from Casimir eigenvalues and from the expanded row sum; the two
    must agree exactly.
    """
    if left.d != right.d:
        raise ValueError(f"ambient rows differ: {left.d} vs {right.d}")
    if left.n < 1 or right.n < 1:
        raise ValueError("both diagrams need at least one box")
    combined = min_product_diagram(left, right)
    a = _energy_from_casimirs(left, right, combined)
    b = _energy_from_rows(left, right, combined)
    if a != b:
        raise InternalConsistencyError(
            f"triple energy routes disagree for {left}, {right}: {a} != {b}"
        )
    return a


def _check_split(query: ExtendibilityQuery, d_hat: int) -> None:
    if not 1 <= d_hat <= query.d - 1:
        raise ValueError(f"d_hat={d_hat} outside [1, {query.d - 1}]")


def candidate_pair(query: ExtendibilityQuery, d_hat: int) -> PartitionPair:
    """Near-rectangular left diagram in ``d_hat`` rows, right in ``d - d_hat`` rows."""
    _check_split(query, d_hat)
    d = query.d
    return PartitionPair(
        near_rectangular(query.n_left, d_hat, d),
        near_rectangular(query.n_right, d - d_hat, d),
    )


def candidate_energy_closed_form(query: ExtendibilityQuery, d_hat: int) -> Fraction:
    """Triple energy of :func:`candidate_pair` without building the diagrams."""
    _check_split(query, d_hat)
    nl, nr = query.n_left, query.n_right
    d_rest = query.d - d_hat
    ql, rl = divmod(nl, d_hat)
    qr, rr = divmod(nr, d_rest)
    if ql != qr:
        return -min(Fraction(d_hat, nl), Fraction(d_rest, nr))
    return -Fraction(d_hat * d_rest * ql + rl * rr, nl * nr)


def _round_half_up(x: Fraction) -> int:
    return floor(x + Fraction(1, 2))


def candidate_set(query: ExtendibilityQuery) -> tuple[int, ...]:
    """Row splits worth comparing: the balanced split and its two neighbours."""
    centre = _round_half_up(Fraction(query.d * query.n_left, query.n_left + query.n_right))
    centre = min(max(centre, 1), query.d - 1)
    return tuple(k for k in (centre - 1, centre, centre + 1) if 1 <= k <= query.d - 1)


def alpha(query: ExtendibilityQuery) -> ExtendibilityResult:
    """Closed-form threshold: the best near-rectangular candidate.

    The restricted minimum over :func:`candidate_set` is checked against a
    scan of every split ``1..d-1``.
    """
    energies = {k: candidate_energy_closed_form(query, k) for k in range(1, query.d)}
    best_full = min(energies.values())
    cands = candidate_set(query)
    best = min(energies[k] for k in cands)
    if best != best_full:
        raise InternalConsistencyError(
            f"candidate splits {cands} give {best}, full scan gives {best_full} for {query}"
        )
    d_hat = min(k for k in cands if energies[k] == best)
    left, right = candidate_pair(query, d_hat)
    return ExtendibilityResult(
        query=query,
        alpha=best,
        left=left,
        right=right,
        combined=min_product_diagram(left, right),
        d_hat=d_hat,
        candidates=cands,
    )


def exhaustive_alpha(
    query: ExtendibilityQuery, max_pairs: int = DEFAULT_PAIR_BUDGET
) -> ExtendibilityResult:
    """Minimum triple energy over every pair of diagrams (brute force).

    The first minimizing pair in enumeration order is reported; ``d_hat`` is
    left unset.
    """
    lefts = enumerate_partitions(query.n_left, query.d)
    rights = enumerate_partitions(query.n_right, query.d)
    size = len(lefts) * len(rights)
    if size > max_pairs:
        raise BudgetExceededError(
            f"exhaustive scan for {query} needs {size} partition pairs (budget {max_pairs})"
        )
    best = None
    for left in lefts:
        for right in rights:
            e = triple_energy(left, right)
            if best is None or e < best[0]:
                best = (e, left, right)
    e, left, right = best
    return ExtendibilityResult(
        query=query, alpha=e, left=left, right=right, combined=min_product_diagram(left, right)
    )


# Reduction path towards the near-rectangular candidates


def _replace_head(p: Partition, head: Partition, rows: int) -> Partition:
    return Partition(head.rows[:rows] + p.rows[rows:], p.d)


def is_standard_form(pair: PartitionPair) -> bool:
    return standardize_nonoverlap(pair) == pair


def standardize_nonoverlap(pair: PartitionPair, fill_spare: bool = False) -> PartitionPair:
    """Flatten the non-overlapping rows of each diagram to their dominance minimum.

    Overlapping rows are untouched. With ``fill_spare``, rows empty in both
    diagrams are given to the left diagram before flattening.
    """
    prof = overlap_profile(pair)
    d = pair.d
    d_left = prof.d_left + (prof.spare if fill_spare else 0)
    left = _replace_head(pair.left, near_rectangular(prof.n_left, d_left, d), d_left)
    right = _replace_head(
        pair.right, near_rectangular(prof.n_right, prof.d_right, d), prof.d_right
    )
    return PartitionPair(left, right)


def _shrink(p: Partition, d_own: int, d_overlap: int, n_own: int) -> Partition:
    rows = list(p.rows)
    rows[d_own + d_overlap - 1] -= 1
    target = n_own % d_own if d_own else 0
    rows[target] += 1
    return Partition(rows, p.d)


def _shrunk_left(pair: PartitionPair, prof) -> PartitionPair:
    return PartitionPair(_shrink(pair.left, prof.d_left, prof.d_overlap, prof.n_left), pair.right)


def _shrunk_right(pair: PartitionPair, prof) -> PartitionPair:
    return PartitionPair(
        pair.left, _shrink(pair.right, prof.d_right, prof.d_overlap, prof.n_right)
    )


def shrink_overlap_step(pair: PartitionPair) -> PartitionPair:
    """Move one box out of the overlap into a non-overlapping part.

    The box leaves the bottommost overlapping row of the side with the smaller
    boxes-per-row ratio in its non-overlapping part and lands on the first
    row that keeps that part near-rectangular. On equal ratios both moves are
    tried and the lower triple energy wins (left on a further tie). A side
    without non-overlapping rows puts the box on its top row and is only
    chosen when the other side has none either.
    """
    if not is_standard_form(pair):
        raise ValueError("pair is not in standard form; call standardize_nonoverlap first")
    prof = overlap_profile(pair)
    if prof.d_overlap == 0:
        raise ValueError("pair has no overlapping rows")
    if prof.d_left == 0 and prof.d_right == 0:
        return _shrunk_left(pair, prof)
    if prof.d_left == 0:
        return _shrunk_right(pair, prof)
    if prof.d_right == 0:
        return _shrunk_left(pair, prof)
    lhs = prof.n_left * prof.d_right
    rhs = prof.n_right * prof.d_left
    if lhs < rhs:
        return _shrunk_left(pair, prof)
    if lhs > rhs:
        return _shrunk_right(pair, prof)
    left_move, right_move = _shrunk_left(pair, prof), _shrunk_right(pair, prof)
    if triple_energy(*right_move) < triple_energy(*left_move):
        return right_move
    return left_move


def reduction_path(pair: PartitionPair) -> list[PartitionPair]:
    """Standardize, shrink the overlap until it vanishes, then fill spare rows.

    Returns every intermediate pair, starting with the input.
    """
    path = [pair]

    def push(nxt: PartitionPair) -> None:
        if nxt != path[-1]:
            path.append(nxt)

    push(standardize_nonoverlap(pair))
    while overlap_profile(path[-1]).d_overlap:
        push(shrink_overlap_step(path[-1]))
        push(standardize_nonoverlap(path[-1]))
    push(standardize_nonoverlap(path[-1], fill_spare=True))
    return path


def matching_candidate(pair: PartitionPair, query: ExtendibilityQuery) -> int | None:
    """The split ``d_hat`` whose candidate pair equals ``pair``, if any."""
    for k in range(1, query.d):
        if candidate_pair(query, k) == pair:
            return k
    return None
