"""Extremal parameter of (n_L, n_R)-extendible isotropic states.

The relevant operator is the average of partially transposed flips, whose
largest eigenvalue is the threshold. Its eigenvalues are labelled by
``left``, ``right`` and a constituent of ``left (x) dual(right)``:

    [c(left) + c(right) - c(combined)] / (2 n_L n_R) + 1/d

The closed form depends only on ``max(n_L, n_R)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .casimir import casimir_eigenvalue, fraction_str
from .errors import BudgetExceededError
from .lr import min_product_diagram
from .partitions import Partition, dual, enumerate_partitions
from .werner import DEFAULT_PAIR_BUDGET, ExtendibilityQuery


@dataclass(frozen=True)
class IsotropicResult:
    query: ExtendibilityQuery
    beta: Fraction
    left: Partition | None = None
    right: Partition | None = None

    @property
    def d(self) -> int:
        return self.query.d

    @property
    def n_left(self) -> int:
        return self.query.n_left

    @property
    def n_right(self) -> int:
        return self.query.n_right

    def to_json(self) -> dict:
        out = {
            "beta": fraction_str(self.beta),
            "beta_float": float(self.beta),
            "d": self.d,
            "n_left": self.n_left,
            "n_right": self.n_right,
        }
        if self.left is not None:
            out["left"] = self.left.to_json()
            out["right"] = self.right.to_json()
        return out


def beta(query: ExtendibilityQuery) -> IsotropicResult:
    return IsotropicResult(query, 1 + Fraction(query.d - 1, max(query.n_left, query.n_right)))


def isotropic_combined(left: Partition, right: Partition) -> Partition:
    """Dominance-least constituent of ``left (x) dual(right)`` (narrowest dual)."""
    return min_product_diagram(left, dual(right, right.rows[0]))


def isotropic_triple_energy(left: Partition, right: Partition) -> Fraction:
    if left.d != right.d:
        raise ValueError(f"ambient rows differ: {left.d} vs {right.d}")
    if left.n < 1 or right.n < 1:
        raise ValueError("both diagrams need at least one box")
    combined = isotropic_combined(left, right)
    return (
        casimir_eigenvalue(left) + casimir_eigenvalue(right) - casimir_eigenvalue(combined)
    ) / (2 * left.n * right.n) + Fraction(1, left.d)


def exhaustive_beta(
    query: ExtendibilityQuery, max_pairs: int = DEFAULT_PAIR_BUDGET
) -> IsotropicResult:
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
            e = isotropic_triple_energy(left, right)
            if best is None or e > best[0]:
                best = (e, left, right)
    return IsotropicResult(query, *best)
