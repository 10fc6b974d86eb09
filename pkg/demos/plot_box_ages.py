"""
Box elements and ages
=====================

Each maximal cone of a simplicial fan contributes |det| box elements.  The
age of a box element plus the age of its inverse is the dimension of its
minimal cone.
"""

import numpy as np

from latticespec.fanbox import age_pair, box_union, maximal_cones
from latticespec.lefschetz import hl_box_criterion
from latticespec.weights import WeightSystem, construct_simplex

P = construct_simplex(WeightSystem((1, 1, 3)))
print("vertices:\n", np.array(P.vertices))

for cone in maximal_cones(P):
    print(f"cone {cone.generator_indices}: index {cone.index}")

for e in box_union(P):
    if e.support_dim == 0:
        continue
    p = age_pair(e)
    print(f"{e.point}: age {p.age}, inverse {p.inverse.point} age {p.inverse_age}, dim {e.support_dim}")

# (1,1,3) fails: a box element of a 2-dim cone has non-integral age
v = hl_box_criterion(P)
print("HL:", v.holds)
for w in v.witnesses:
    print("  witness", w.where, "age", w.age, "floor", w.lhs, "expected", w.rhs)
