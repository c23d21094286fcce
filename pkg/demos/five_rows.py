"""
Where the near-rectangular candidates stop being optimal
========================================================

Up to four rows the best near-rectangular pair always attains the minimum
over all diagram pairs. With five rows it does not.
"""

from itertools import product

from wernerext import ExtendibilityQuery, Partition, alpha, exhaustive_alpha, triple_energy

for d in (4, 5, 6):
    gaps = []
    for nl, nr in product(range(1, 11), repeat=2):
        q = ExtendibilityQuery(d, nl, nr)
        closed, brute = alpha(q), exhaustive_alpha(q)
        if closed.alpha != brute.alpha:
            gaps.append((nl, nr, closed.alpha, brute.alpha, brute.left, brute.right))
    print(f"d={d}: {len(gaps)} of 100 queries beat the candidates")
    for nl, nr, c, b, left, right in gaps:
        print(f"   ({nl},{nr}) candidates {c}  true {b}  at {left} | {right}")

# the smallest case, by hand
pair = Partition([2, 2, 1], 5), Partition([2, 2, 1], 5)
print("E(221 | 221) =", triple_energy(*pair))
