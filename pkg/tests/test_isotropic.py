import itertools
from fractions import Fraction

import pytest

from wernerext.isotropic import (
    beta,
    exhaustive_beta,
    isotropic_combined,
    isotropic_triple_energy,
)
from wernerext.partitions import Partition, equivalent_labels
from wernerext.werner import ExtendibilityQuery


def Q(d, nl, nr):
    return ExtendibilityQuery(d, nl, nr)


@pytest.mark.parametrize(
    "query, value",
    [(Q(2, 1, 1), Fraction(2)), (Q(3, 2, 2), Fraction(2)), (Q(4, 1, 5), Fraction(8, 5))],
)
def test_beta_values(query, value):
    assert beta(query).beta == value


def test_beta_depends_on_larger_side_only():
    for d in range(2, 8):
        for nl, nr in itertools.product(range(1, 10), repeat=2):
            b = beta(Q(d, nl, nr)).beta
            assert 1 <= b <= d
            assert b == beta(Q(d, max(nl, nr), 1)).beta


def test_result_json():
    out = beta(Q(4, 1, 5)).to_json()
    assert out == {"beta": "8/5", "beta_float": 1.6, "d": 4, "n_left": 1, "n_right": 5}


@pytest.mark.parametrize("d", range(2, 6))
@pytest.mark.parametrize("n", range(1, 5))
def test_single_rows_give_singlet(d, n):
    row = Partition([n], d)
    assert equivalent_labels(isotropic_combined(row, row), Partition((), d))
    assert isotropic_triple_energy(row, row) == 1 + Fraction(d - 1, n)


def test_mixed_pair_below_threshold():
    left, right = Partition([1, 1], 3), Partition([1], 3)
    assert isotropic_triple_energy(left, right) <= beta(Q(3, 2, 1)).beta


def test_exhaustive_matches_closed_form():
    for d in range(2, 5):
        for nl, nr in itertools.product(range(1, 7), repeat=2):
            q = Q(d, nl, nr)
            assert exhaustive_beta(q).beta == beta(q).beta, q


def test_exhaustive_reports_maximizer():
    res = exhaustive_beta(Q(3, 2, 2))
    assert isotropic_triple_energy(res.left, res.right) == res.beta
    assert "left" in res.to_json()
