"""Rack counting invariants of framed links in the lens spaces L(p,1)."""

from .diagram import (
    Crossing,
    LensDiagram,
    Strand,
    add_positive_kink,
    apply_omega2,
    diagram_from_events,
    framing_representatives,
    mirror_diagram,
    parse_diagram,
    serialize_diagram,
    writhe_vector,
)
from .invariants import (
    ClosureConflict,
    Poly,
    all_invariants,
    format_polynomial,
    integral_invariant,
    symmetry_invariant,
    symmetry_permutation,
    writhe_enhanced_invariant,
    writhe_symmetry_invariant,
)
from .rack import (
    Permutation,
    RackTable,
    enumerate_racks,
    eval_word,
    inv_op,
    is_quandle,
    op,
    operator_equivalent,
    parse_rack,
    permutation_order,
    rack_rank,
    validate_rack,
)
from .solver import (
    Homomorphism,
    apply_A_power,
    check_conditions,
    count_homomorphisms,
    enumerate_homomorphisms,
    enumerate_level_colorings,
    oracle_enumerate_homomorphisms,
)
from .fixtures import load_diagram, load_rack

__version__ = "0.1.0"
