"""Explicit operators on the full tensor space and an extremal eigensolver.

Nothing here uses partitions or representation theory, so the spectra give
an independent check of the combinatorial thresholds.

Basis strings are little-endian in the site index: site 0 varies fastest,
and the left sites are ``0..n_L-1``.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Iterator

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import ArpackNoConvergence, LinearOperator, eigsh

from .errors import BudgetExceededError
from .werner import ExtendibilityQuery

BUDGET_ENV = "WERNER_ORACLE_BUDGET"
DEFAULT_BUDGET = 4096
DENSE_CUTOFF = 1024
ROUTES = ("permutation", "generator")


class ConvergenceError(RuntimeError):
    def __init__(self, message: str, residual: float):
        super().__init__(message)
        self.residual = residual


def oracle_budget() -> int:
    """Largest allowed tensor-space dimension (``WERNER_ORACLE_BUDGET`` overrides)."""
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV}={raw!r} is not an integer") from None
    if value < 1:
        raise ValueError(f"{BUDGET_ENV} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class SparseOperator:
    matrix: sp.csr_matrix
    route: str | None = None

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    def entries(self) -> Iterator[tuple[int, int, float]]:
        coo = self.matrix.tocoo()
        order = np.lexsort((coo.col, coo.row))
        for k in order:
            yield int(coo.row[k]), int(coo.col[k]), float(coo.data[k])

    def is_symmetric(self, atol: float = 0.0) -> bool:
        diff = self.matrix - self.matrix.T
        return diff.nnz == 0 or float(abs(diff).max()) <= atol

    def toarray(self) -> np.ndarray:
        return self.matrix.toarray()

    def to_text(self) -> str:
        lines = [str(self.dimension)]
        lines += [f"{r} {c} {v!r}" for r, c, v in self.entries() if v != 0.0]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class SpectralReport:
    extremal_eigenvalue: float
    residual_norm: float
    iterations: int
    construction_route: str | None
    which: str
    dimension: int

    def to_json(self) -> str:
        return json.dumps(self.__dict__)


def _digits(d: int, n: int) -> np.ndarray:
    idx = np.arange(d**n)
    return np.stack([(idx // d**k) % d for k in range(n)], axis=1)


def _codes(digits: np.ndarray, d: int) -> np.ndarray:
    return digits @ (d ** np.arange(digits.shape[1]))


def _check_sites(i: int, j: int, n_total: int) -> None:
    if i == j:
        raise ValueError(f"sites must differ, got {i} twice")
    if not (0 <= i < n_total and 0 <= j < n_total):
        raise ValueError(f"sites ({i}, {j}) outside 0..{n_total - 1}")


def _flip_matrix(i: int, j: int, d: int, n_total: int) -> sp.csr_matrix:
    digits = _digits(d, n_total)
    src = np.arange(d**n_total)
    swapped = digits.copy()
    swapped[:, [i, j]] = swapped[:, [j, i]]
    dst = _codes(swapped, d)
    return sp.csr_matrix((np.ones(src.size), (dst, src)), shape=(src.size,) * 2)


def _flip_pt_matrix(i: int, j: int, d: int, n_total: int) -> sp.csr_matrix:
    digits = _digits(d, n_total)
    src = np.flatnonzero(digits[:, i] == digits[:, j])
    rows, cols = [], []
    for a in range(d):
        moved = digits[src].copy()
        moved[:, i] = a
        moved[:, j] = a
        rows.append(_codes(moved, d))
        cols.append(src)
    dim = d**n_total
    data = np.ones(len(src) * d)
    return sp.csr_matrix((data, (np.concatenate(rows), np.concatenate(cols))), shape=(dim, dim))


def build_flip(site_i: int, site_j: int, d: int, n_total: int) -> SparseOperator:
    """Permutation operator exchanging tensor factors ``site_i`` and ``site_j``."""
    _check_sites(site_i, site_j, n_total)
    return SparseOperator(_flip_matrix(site_i, site_j, d, n_total), "permutation")


def build_flip_partial_transpose(site_i: int, site_j: int, d: int, n_total: int) -> SparseOperator:
    """``sum_ab |aa><bb|`` on the two sites: ``d`` times the maximally entangled projector."""
    _check_sites(site_i, site_j, n_total)
    return SparseOperator(_flip_pt_matrix(site_i, site_j, d, n_total), "permutation")


def generator(a: int, b: int, d: int) -> np.ndarray:
    """Single-site traceless generator ``|b><a| - delta_ab / d``."""
    g = np.zeros((d, d))
    g[b, a] = 1.0
    if a == b:
        g -= np.eye(d) / d
    return g


def _embed(op: np.ndarray, site: int, d: int, n_total: int) -> sp.csr_matrix:
    left = sp.identity(d ** (n_total - 1 - site), format="csr")
    right = sp.identity(d**site, format="csr")
    return sp.kron(sp.kron(left, sp.csr_matrix(op)), right, format="csr")


def _total_generator(a, b, d, n_total, sites=(), dual_sites=()) -> sp.csr_matrix:
    """``sum_k S_k^{ab}`` over ``sites`` minus ``sum_l S_l^{ba}`` over ``dual_sites``."""
    total = sp.csr_matrix((d**n_total,) * 2)
    for k in sites:
        total = total + _embed(generator(a, b, d), k, d, n_total)
    for k in dual_sites:
        total = total - _embed(generator(b, a, d), k, d, n_total)
    return total


def casimir_operator(d: int, n_total: int, sites=(), dual_sites=()) -> sp.csr_matrix:
    """Quadratic Casimir of the product representation on the chosen sites.

    ``dual_sites`` carry the complex-conjugate representation.
    """
    gens = {
        (a, b): _total_generator(a, b, d, n_total, sites, dual_sites)
        for a in range(d)
        for b in range(d)
    }
    total = sp.csr_matrix((d**n_total,) * 2)
    for a in range(d):
        for b in range(d):
            total = total + gens[a, b] @ gens[b, a]
    return total


def _check_budget(query: ExtendibilityQuery, budget: int | None) -> int:
    budget = oracle_budget() if budget is None else budget
    dim = query.d ** (query.n_left + query.n_right)
    if dim > budget:
        raise BudgetExceededError(
            f"tensor space for {query} has dimension {dim}, above the oracle budget {budget}"
        )
    return dim


def _check_route(route: str) -> None:
    if route not in ROUTES:
        raise ValueError(f"unknown construction route {route!r}; expected one of {ROUTES}")


def build_hamiltonian_werner(
    query: ExtendibilityQuery, route: str = "permutation", budget: int | None = None
) -> SparseOperator:
    """Average of the flips between left and right sites."""
    _check_route(route)
    dim = _check_budget(query, budget)
    d, nl, nr = query.d, query.n_left, query.n_right
    n = nl + nr
    left, right = range(nl), range(nl, n)
    if route == "permutation":
        h = sp.csr_matrix((dim, dim))
        for i in left:
            for j in right:
                h = h + _flip_matrix(i, j, d, n)
        h = h / (nl * nr)
    else:
        c_lr = casimir_operator(d, n, sites=range(n))
        c_l = casimir_operator(d, n, sites=left)
        c_r = casimir_operator(d, n, sites=right)
        h = (c_lr - c_l - c_r) / (2 * nl * nr) + sp.identity(dim, format="csr") / d
    return SparseOperator(sp.csr_matrix(h), route)


def build_hamiltonian_isotropic(
    query: ExtendibilityQuery, route: str = "permutation", budget: int | None = None
) -> SparseOperator:
    """Average of the partially transposed flips; its largest eigenvalue is beta."""
    _check_route(route)
    dim = _check_budget(query, budget)
    d, nl, nr = query.d, query.n_left, query.n_right
    n = nl + nr
    left, right = range(nl), range(nl, n)
    if route == "permutation":
        h = sp.csr_matrix((dim, dim))
        for i in left:
            for j in right:
                h = h + _flip_pt_matrix(i, j, d, n)
        h = h / (nl * nr)
    else:
        c_mixed = casimir_operator(d, n, sites=left, dual_sites=right)
        c_l = casimir_operator(d, n, sites=left)
        c_r = casimir_operator(d, n, sites=right)
        h = (c_l + c_r - c_mixed) / (2 * nl * nr) + sp.identity(dim, format="csr") / d
    return SparseOperator(sp.csr_matrix(h), route)


def extremal_eigenvalue(
    op: SparseOperator,
    which: str = "min",
    tol: float = 1e-10,
    dense_cutoff: int = DENSE_CUTOFF,
    maxiter: int | None = None,
    seed: int = 0,
) -> SpectralReport:
    """Smallest or largest eigenvalue with a certified residual.

    Small operators are diagonalized densely; larger ones go through
    ARPACK's Lanczos driver using matrix-vector products only. The residual
    ``||A v - lambda v||`` must not exceed ``tol * ||A||_1``.
    """
    if which not in ("min", "max"):
        raise ValueError(f"which must be 'min' or 'max', got {which!r}")
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = op.matrix
    dim = op.dimension
    scale = max(float(abs(a).sum(axis=0).max()) if a.nnz else 0.0, 1.0)

    if dim <= dense_cutoff:
        vals, vecs = np.linalg.eigh(a.toarray())
        k = 0 if which == "min" else -1
        lam, vec = float(vals[k]), vecs[:, k]
        iterations = 0
    else:
        count = [0]

        def matvec(x):
            count[0] += 1
            return a @ x

        lin = LinearOperator((dim, dim), matvec=matvec, dtype=float)
        v0 = np.random.default_rng(seed).standard_normal(dim)
        try:
            vals, vecs = eigsh(
                lin, k=1, which="SA" if which == "min" else "LA", v0=v0, tol=tol * 1e-2,
                maxiter=maxiter,
            )
        except ArpackNoConvergence as exc:
            if len(exc.eigenvalues) == 0:
                raise ConvergenceError(
                    f"Lanczos did not converge after {count[0]} products", float("inf")
                ) from exc
            vals, vecs = exc.eigenvalues, exc.eigenvectors
        lam, vec = float(vals[0]), vecs[:, 0]
        iterations = count[0]

    vec = vec / np.linalg.norm(vec)
    residual = float(np.linalg.norm(a @ vec - lam * vec))
    if residual > tol * scale:
        raise ConvergenceError(
            f"residual {residual:.3e} exceeds {tol:.1e} * ||A|| = {tol * scale:.3e}", residual
        )
    return SpectralReport(lam, residual, iterations, op.route, which, dim)
