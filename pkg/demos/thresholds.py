"""
Werner and isotropic thresholds, closed form against the explicit spectrum
=========================================================================
"""

from wernerext import ExtendibilityQuery, alpha, beta
from wernerext.oracle import (
    build_hamiltonian_isotropic,
    build_hamiltonian_werner,
    extremal_eigenvalue,
)

# a query is the local dimension plus the two extension sizes
q = ExtendibilityQuery(d=3, n_left=2, n_right=2)
res = alpha(q)
print("alpha =", res.alpha, "from the split d_hat =", res.d_hat)
print("minimizing diagrams:", res.left, res.right, "->", res.combined)

# the same number as the lowest eigenvalue of the averaged flip on 3**4 states
op = build_hamiltonian_werner(q)
print("lowest eigenvalue:", extremal_eigenvalue(op, "min").extremal_eigenvalue)

# isotropic threshold only cares about the larger side (4**6 states at most)
for nl, nr in [(1, 5), (5, 1), (3, 3), (2, 3)]:
    q = ExtendibilityQuery(4, nl, nr)
    top = extremal_eigenvalue(build_hamiltonian_isotropic(q), "max").extremal_eigenvalue
    print(f"beta(4, {nl}, {nr}) = {beta(q).beta}  spectrum top = {top:.12f}")
