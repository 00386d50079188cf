"""superverge: exact monomial orbit modules of the unitriangular group.

The group U_n(q) of lower unitriangular matrices over F_q acts on both
sides of a basis of idempotents labelled by strictly lower triangular
matrices, with p-th-root-of-unity coefficients.  This package computes
the resulting orbit calculus exactly: orbits and their canonical
templates/verges, hook combinatorics, the classification and count of
minimal-dimension irreducible constituents, their monomial sources, the
counting polynomial d_n(t), and a brute-force linear-algebra oracle over
Z[zeta_p] that re-derives everything independently at small sizes.
"""

from .action import (GroupElement, NilMatrix, ScaledIdempotent,
                     act_left_elem, act_left_root, act_right_elem,
                     act_right_root)
from .census import CountingPolynomial, count_direct, d_polynomial
from .field import FieldSpec, make_field, parse_field_name, theta_exponent
from .kernel import IMPLEMENTATION as KERNEL_IMPLEMENTATION
from .minimality import (MinimalityReport, SideSets, analyze,
                         is_hook_disconnected, monomial_sources, perp,
                         side_sets, verify_upsilon)
from .orbits import (Orbit, VergeData, classify, orbit_bfs,
                     template_of_orbit, templates_of_verge)
from .rootcomb import MainConditionSet, PatternSet, hook, hook_meeting

__version__ = "0.1.0"

__all__ = [
    "CountingPolynomial", "FieldSpec", "GroupElement", "KERNEL_IMPLEMENTATION",
    "MainConditionSet", "MinimalityReport", "NilMatrix", "Orbit",
    "PatternSet", "ScaledIdempotent", "SideSets", "VergeData",
    "act_left_elem", "act_left_root", "act_right_elem", "act_right_root",
    "analyze", "classify", "count_direct", "d_polynomial", "hook",
    "hook_meeting", "is_hook_disconnected", "make_field", "monomial_sources",
    "orbit_bfs", "parse_field_name", "perp", "side_sets",
    "template_of_orbit", "templates_of_verge", "theta_exponent",
    "verify_upsilon",
]
