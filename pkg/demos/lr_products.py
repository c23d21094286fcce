"""
Tensor products of SU(d) irreps and their least constituent
===========================================================
"""

from wernerext import Partition, lr_decompose, min_product_diagram
from wernerext.lr import weyl_dimension

adj = Partition([2, 1], 3)
dec = lr_decompose(adj, adj)  # 8 x 8 for SU(3)
for shape, mult in dec.items():
    print(f"{str(shape):10s} x{mult}  dim {weyl_dimension(shape)}")

# the dimensions add up
print(sum(m * weyl_dimension(p) for p, m in dec.items()), "=", weyl_dimension(adj) ** 2)

# the dominance-least constituent is the sorted sum of one diagram with the other flipped
print("least constituent:", dec.minimum(), "sorted row sum:", min_product_diagram(adj, adj))

left, right = Partition([3, 1], 3), Partition([2, 2], 3)
print(left, "x", right, "->", min_product_diagram(left, right))
