"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run directly (``python tests/test_acceptance.py``) or through pytest; the
status lines bypass output capture so they appear in ``pytest -v`` logs.
Every criterion also enforces its wall-clock limit.
"""

import itertools
import random
import time
from fractions import Fraction

import pytest

from wernerext.casimir import cover_casimir_gap, cover_gap_index_forms
from wernerext.isotropic import beta
from wernerext.lr import check_dual_symmetry, lr_decompose, min_product_diagram, min_right_factor
from wernerext.oracle import (
    build_hamiltonian_isotropic,
    build_hamiltonian_werner,
    extremal_eigenvalue,
)
from wernerext.partitions import (
    PartitionPair,
    covers,
    dominates,
    enumerate_partitions,
)
from wernerext.werner import (
    ExtendibilityQuery,
    alpha,
    candidate_energy_closed_form,
    candidate_set,
    exhaustive_alpha,
    matching_candidate,
    reduction_path,
    triple_energy,
)

ORACLE_LIMIT = 4096


def report(capsys, number, title, failures, elapsed, limit, checked):
    ok = not failures and elapsed <= limit
    status = "PASS" if ok else "FAIL"
    line = f"criterion {number:>2} {status}: {title} ({checked} checks, {elapsed:.1f}s / {limit}s)"
    if failures:
        shown = "; ".join(str(f) for f in failures[:6])
        more = f" (+{len(failures) - 6} more)" if len(failures) > 6 else ""
        line += f" | {len(failures)} failing: {shown}{more}"
    elif elapsed > limit:
        line += " | over time limit"
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


def oracle_grid():
    grid = []
    d = 2
    while d * d <= ORACLE_LIMIT:
        n = 2
        while d ** n <= ORACLE_LIMIT:
            for nl in range(1, n):
                grid.append(ExtendibilityQuery(d, nl, n - nl))
            n += 1
        d += 1
    return grid


def test_criterion_01_d3_diagonal(capsys):
    t0 = time.perf_counter()
    failures = [
        (n, alpha(ExtendibilityQuery(3, n, n)).alpha)
        for n in range(1, 41)
        if alpha(ExtendibilityQuery(3, n, n)).alpha != Fraction(-1, n)
    ]
    report(capsys, 1, "alpha(3,n,n) = -1/n for n <= 40", failures,
           time.perf_counter() - t0, 1, 40)


def test_criterion_02_saturation_region(capsys):
    t0 = time.perf_counter()
    failures, checked = [], 0
    for d in range(2, 13):
        for nl, nr in itertools.product(range(1, 13), repeat=2):
            checked += 1
            a = alpha(ExtendibilityQuery(d, nl, nr)).alpha
            if (a == -1) != (nl + nr <= d):
                failures.append((d, nl, nr, str(a)))
    report(capsys, 2, "alpha = -1 iff n_L+n_R <= d (d,n <= 12)", failures,
           time.perf_counter() - t0, 5, checked)


def test_criterion_03_reduction_soundness(capsys):
    t0 = time.perf_counter()
    failures, checked = [], 0
    for d in range(2, 6):
        for nl, nr in itertools.product(range(1, 9), repeat=2):
            q = ExtendibilityQuery(d, nl, nr)
            checked += 1
            closed, brute = alpha(q).alpha, exhaustive_alpha(q).alpha
            if closed != brute:
                failures.append(f"d={d} ({nl},{nr}) closed {closed} vs exhaustive {brute}")
    report(capsys, 3, "closed form equals exhaustive scan (d <= 5, n <= 8)", failures,
           time.perf_counter() - t0, 120, checked)


def _spectral_failures(grid, build, which, expected):
    failures = []
    for q in grid:
        rep = extremal_eigenvalue(build(q, budget=ORACLE_LIMIT), which)
        target = float(expected(q))
        if abs(rep.extremal_eigenvalue - target) > 1e-8:
            failures.append((q.d, q.n_left, q.n_right, rep.extremal_eigenvalue, target))
    return failures


def test_criterion_04_spectral_werner(capsys):
    t0 = time.perf_counter()
    grid = oracle_grid()
    failures = _spectral_failures(grid, build_hamiltonian_werner, "min",
                                  lambda q: alpha(q).alpha)
    report(capsys, 4, "min eig of flip average equals alpha (d^n <= 4096)", failures,
           time.perf_counter() - t0, 600, len(grid))


def test_criterion_05_spectral_isotropic(capsys):
    t0 = time.perf_counter()
    grid = oracle_grid()
    failures = _spectral_failures(
        grid, build_hamiltonian_isotropic, "max",
        lambda q: 1 + Fraction(q.d - 1, max(q.n_left, q.n_right)),
    )
    failures += [(q.d, q.n_left, q.n_right, "closed form") for q in grid
                 if beta(q).beta != 1 + Fraction(q.d - 1, max(q.n_left, q.n_right))]
    report(capsys, 5, "max eig of transposed-flip average equals beta (d^n <= 4096)",
           failures, time.perf_counter() - t0, 600, len(grid))


def test_criterion_06_lr_minimum(capsys):
    t0 = time.perf_counter()
    failures, checked = [], 0
    for d in range(1, 6):
        for nl, nr in itertools.product(range(7), repeat=2):
            for a in enumerate_partitions(nl, d):
                for b in enumerate_partitions(nr, d):
                    checked += 1
                    dec = lr_decompose(a, b)
                    m = min_product_diagram(a, b)
                    if m not in dec or not all(dominates(p, m) for p in dec):
                        failures.append((str(a), str(b), str(m)))
    report(capsys, 6, "sorted row sum is the dominance minimum of the product", failures,
           time.perf_counter() - t0, 300, checked)


def test_criterion_07_least_right_factor_and_dual_symmetry(capsys):
    t0 = time.perf_counter()
    failures, checked = [], 0
    for d in range(1, 5):
        by_weight = {n: enumerate_partitions(n, d) for n in range(9)}
        for nb in range(9):
            for big in by_weight[nb]:
                for nl in range(nb + 1):
                    for left in by_weight[nl]:
                        rights = by_weight[nb - nl]
                        hits = [r for r in rights if lr_decompose(left, r)[big]]
                        for r in rights:
                            checked += 1
                            if not check_dual_symmetry(left, r, big):
                                failures.append(("dual", d, str(left), str(r), str(big)))
                        if any(x < y for x, y in zip(big.rows, left.rows)):
                            continue
                        checked += 1
                        low = min_right_factor(big, left)
                        if low not in hits or not all(dominates(h, low) for h in hits):
                            failures.append(("min factor", d, str(big), str(left)))
    report(capsys, 7, "least right factor and dual symmetry (weights <= 8, d <= 4)",
           failures, time.perf_counter() - t0, 300, checked)


def test_criterion_08_casimir_covers(capsys):
    t0 = time.perf_counter()
    failures, checked = [], 0
    for d in range(1, 6):
        for n in range(11):
            ps = enumerate_partitions(n, d)
            for a, b in itertools.product(ps, repeat=2):
                if not covers(a, b):
                    continue
                checked += 1
                first, second = cover_gap_index_forms(a, b)
                if first != second or cover_casimir_gap(a, b) < 1:
                    failures.append((str(a), str(b)))
    report(capsys, 8, "Casimir gap on covers is >= 1, index forms agree", failures,
           time.perf_counter() - t0, 60, checked)


def test_criterion_09_reduction_monotone(capsys):
    t0 = time.perf_counter()
    rng = random.Random(20240611)
    cache = {}
    failures = []
    for _ in range(10_000):
        d = rng.randint(2, 6)
        nl, nr = rng.randint(1, 12), rng.randint(1, 12)
        for n in (nl, nr):
            cache.setdefault((n, d), enumerate_partitions(n, d))
        pair = PartitionPair(rng.choice(cache[nl, d]), rng.choice(cache[nr, d]))
        path = reduction_path(pair)
        energies = [triple_energy(*p) for p in path]
        rises = [k for k in range(1, len(path)) if energies[k] > energies[k - 1]]
        end = matching_candidate(path[-1], ExtendibilityQuery(d, nl, nr))
        if rises or end is None:
            failures.append(f"d={d} {pair.left}|{pair.right} rises at steps {rises}, end {end}")
    report(capsys, 9, "standardize/shrink never raise the energy, end at a candidate",
           failures, time.perf_counter() - t0, 300, 10_000)


def test_criterion_10_route_agreement(capsys):
    t0 = time.perf_counter()
    failures, checked = [], 0
    for d in (2, 3):
        for nl in range(1, 4):
            for nr in range(1, 5 - nl):
                q = ExtendibilityQuery(d, nl, nr)
                checked += 1
                a = build_hamiltonian_werner(q, route="permutation").matrix
                b = build_hamiltonian_werner(q, route="generator").matrix
                diff = abs(a - b).max()
                if diff > 1e-12:
                    failures.append((d, nl, nr, diff))
    report(capsys, 10, "permutation and generator constructions agree entrywise", failures,
           time.perf_counter() - t0, 60, checked)


def test_criterion_11_candidate_set(capsys):
    t0 = time.perf_counter()
    failures, checked = [], 0
    for d in range(2, 13):
        for nl, nr in itertools.product(range(1, 41), repeat=2):
            q = ExtendibilityQuery(d, nl, nr)
            checked += 1
            energies = [candidate_energy_closed_form(q, k) for k in range(1, d)]
            restricted = min(energies[k - 1] for k in candidate_set(q))
            if restricted != min(energies):
                failures.append((d, nl, nr))
    report(capsys, 11, "three-split candidate set reaches the full-scan minimum", failures,
           time.perf_counter() - t0, 10, checked)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
