"""Two-sided symmetric-extendibility thresholds of Werner and isotropic states."""

from .casimir import casimir_eigenvalue, cover_casimir_gap
from .errors import BudgetExceededError, InternalConsistencyError
from .isotropic import IsotropicResult, beta, exhaustive_beta, isotropic_triple_energy
from .lr import LRDecomposition, lr_decompose, min_product_diagram, min_right_factor
from .partitions import Partition, PartitionPair, enumerate_partitions
from .werner import (
    ExtendibilityQuery,
    ExtendibilityResult,
    alpha,
    candidate_energy_closed_form,
    candidate_pair,
    exhaustive_alpha,
    triple_energy,
)

__all__ = [
    "BudgetExceededError",
    "ExtendibilityQuery",
    "ExtendibilityResult",
    "InternalConsistencyError",
    "IsotropicResult",
    "LRDecomposition",
    "Partition",
    "PartitionPair",
    "alpha",
    "beta",
    "candidate_energy_closed_form",
    "candidate_pair",
    "casimir_eigenvalue",
    "cover_casimir_gap",
    "enumerate_partitions",
    "exhaustive_alpha",
    "exhaustive_beta",
    "isotropic_triple_energy",
    "lr_decompose",
    "min_product_diagram",
    "min_right_factor",
    "triple_energy",
]
