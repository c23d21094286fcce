"""Quadratic Casimir eigenvalues of SU(d) irreps, in exact rational arithmetic.

Normalization: the defining representation has eigenvalue ``(d**2 - 1) / d``.
The value depends only on the irrep, so diagrams differing by full columns agree.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InternalConsistencyError
from .partitions import Partition, cover_indices


def casimir_eigenvalue(p: Partition) -> Fraction:
    d = p.d
    shift = Fraction(p.n, d)
    total = Fraction(0)
    for i, row in enumerate(p.rows, start=1):
        x = row - shift
        total += x * x + 2 * (d - i) * x
    return total


def cover_gap_index_forms(a: Partition, b: Partition) -> tuple[int, int]:
    """The two index expressions attached to a dominance cover ``a`` over ``b``.

    With the box moving from row ``k`` of ``b`` up to row ``i``, returns
    ``((k - i) + (a_i - a_k) - 2, (k - i) + (b_i - b_k))``. They always coincide.
    """
    idx = cover_indices(a, b)
    if idx is None:
        raise ValueError(f"{a} does not cover {b}")
    i, k = idx
    return (k - i) + (a[i - 1] - a[k - 1]) - 2, (k - i) + (b[i - 1] - b[k - 1])


def cover_casimir_gap(a: Partition, b: Partition) -> Fraction:
    """``c(a) - c(b)`` for a cover, via ``2 * ((k - i) + (b_i - b_k) + 1)``.

    The closed form is checked against the direct eigenvalue difference.
    """
    from_a, from_b = cover_gap_index_forms(a, b)
    if from_a != from_b:
        raise InternalConsistencyError(
            f"cover index forms disagree for {a} over {b}: {from_a} != {from_b}"
        )
    gap = Fraction(2 * (from_b + 1))
    direct = casimir_eigenvalue(a) - casimir_eigenvalue(b)
    if gap != direct:
        raise InternalConsistencyError(
            f"cover gap {gap} != Casimir difference {direct} for {a} over {b}"
        )
    return gap


def fraction_str(x: Fraction) -> str:
    """Reduced ``"p/q"`` string; integers print without a denominator."""
    return str(Fraction(x))
