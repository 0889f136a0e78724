"""
Small racks and their invariants
================================

Validate a rack table, look at its rank and operator classes, and count
all racks of a given order.
"""

import numpy as np

from lensrack import enumerate_racks, is_quandle, validate_rack
from lensrack.rack import operator_classes

# row i holds i > 1, ..., i > n
T = validate_rack([[1, 1, 1], [2, 3, 3], [3, 2, 2]])
print(T.matrix)
print("rank", T.rank, "quandle", is_quandle(T))
print("operator classes", operator_classes(T))

# the diagonal x -> x > x is a permutation whose order is the rank
print("diagonal", T.diagonal().images, "cycles", T.diagonal().cycles())

# counts of racks by order, labeled and up to relabeling
for n in range(1, 5):
    print(n, len(enumerate_racks(n)), len(enumerate_racks(n, up_to_iso=True)))

# ranks of all order-4 racks
ranks = np.array([R.rank for R in enumerate_racks(4, up_to_iso=True)])
print("order 4 ranks:", np.bincount(ranks)[1:])
