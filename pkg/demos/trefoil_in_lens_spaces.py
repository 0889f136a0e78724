"""
Trefoils in L(p,1)
==================

Build a trefoil from its crossing sequence, push it through the surgery
disk, and compare counting invariants for a rank-2 rack.
"""

from lensrack import add_positive_kink, all_invariants, diagram_from_events, load_rack, serialize_diagram

R = load_rack("r6_rank2")

walk = ["O1", "U2", "O3", "U1", "O2", "U3"]
signs = {1: 1, 2: 1, 3: 1}

K0 = diagram_from_events(3, [walk], signs)
print(serialize_diagram(K0))

# one passage through the disk, right after the first overcrossing
K1 = diagram_from_events(3, [walk[:1] + ["D1"] + walk[1:]], signs)

for name, K in (("affine", K0), ("one passage", K1)):
    inv = all_invariants(K, R)
    print(name, inv["phi_Z"], inv["phi_W"], inv["phi_Sym"])

# the rank is 2, so framings are counted mod 2: adding two kinks changes nothing
K0kk = add_positive_kink(add_positive_kink(K0, 0), 0)
print(all_invariants(K0kk, R) == all_invariants(K0, R))
