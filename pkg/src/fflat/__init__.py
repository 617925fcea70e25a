"""Exact-arithmetic toolkit for function field lattices.

Builds the lattices attached to rational, elliptic and hyperelliptic function
fields over odd prime fields, computes their exact invariants (determinants,
successive minima, well-roundedness, minimal-vector bases, class-group counts)
and their automorphism groups, and ships a named verification suite pinning
every headline value.
"""

from .builders import (
    LatticeBundle,
    barnes_lattice,
    build_ff_lattice,
    kernel_lattice,
    oracle_build_ramified_inert,
    root_lattice_a,
    scale,
)
from .curves import (
    FiniteAbelianGroup,
    HyperellipticModel,
    MumfordDivisor,
    Place,
    PlaceEmbedding,
    PlaceSystem,
    cantor_add,
    class_number,
    classify_places,
    elliptic_point_group,
    jacobian_group,
    two_torsion_classes,
)
from .errors import ResourceLimitError
from .fieldpoly import FpPoly, PrimeField, is_squarefree, legendre_symbol, roots_in_fp
from .latcore import (
    GramData,
    IntegerLattice,
    MinimaProfile,
    dual_short_vector_count,
    enumerate_short,
    gram_and_det2,
    index_in,
    is_well_rounded,
    kissing_number,
    lattice_equal,
    lll_reduce,
    minimal_vector_basis,
    minimal_vectors,
    minimum2,
    successive_minima2,
)

__version__ = "0.1.0"
