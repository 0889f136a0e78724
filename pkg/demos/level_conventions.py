"""
Independent versus uniform levels
=================================

A homomorphism from the fundamental rack of a diagram in L(p,1) is a
p-tuple of colorings, one per level. The default keeps every tuple that
extends to a rack homomorphism. The ``uniform`` mode keeps only tuples
with the same coloring on every level and lets the level shift act by the
disk word; some published tables use this count.
"""

from lensrack import load_diagram, load_rack
from lensrack.invariants import all_invariants
from lensrack.solver import enumerate_homomorphisms, oracle_enumerate_homomorphisms

D = load_diagram("unknot_p3")
for rack in ("dihedral3", "r3_rank2"):
    T = load_rack(rack)
    homs = enumerate_homomorphisms(D, T)
    # the brute-force enumerator agrees
    assert homs == oracle_enumerate_homomorphisms(D, T)
    print(rack, [f.levels for f in homs])

K = load_diagram("trefoil_p3")
R = load_rack("r6_rank2")
for levels in ("independent", "uniform"):
    inv = all_invariants(K, R, levels)
    print(levels, inv["phi_Z"], inv["phi_W"], inv["phi_Sym"])
