"""
Walking a diagram pair down to a candidate
==========================================
"""

from wernerext import Partition, PartitionPair, triple_energy
from wernerext.partitions import overlap_profile
from wernerext.werner import ExtendibilityQuery, matching_candidate, reduction_path

pair = PartitionPair(Partition([3, 2, 1, 1], 4), Partition([2, 2, 1], 4))
for step in reduction_path(pair):
    prof = overlap_profile(step)
    print(f"{str(step.left):10s} {str(step.right):10s} overlap rows {prof.d_overlap}"
          f"  E = {triple_energy(*step)}")
q = ExtendibilityQuery(4, pair.left.n, pair.right.n)
print("ends at candidate d_hat =", matching_candidate(step, q))

# with five rows a shrink step can go uphill; both one-box moves do here
start = PartitionPair(Partition([4, 4, 1], 5), Partition([4, 4, 1], 5))
print("start", triple_energy(*start))
print("left move", triple_energy(Partition([5, 4], 5), start.right))
print("right move", triple_energy(start.left, Partition([5, 4], 5)))
