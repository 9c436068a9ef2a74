"""Exact rigidity computations for simple polytopes with n+3 facets given by
Gale diagrams on odd polygons: bigraded Betti data, pentagon Tor-class
search, mod-2 characteristic matrix enumeration, and graded-isomorphism
testing of the resulting GF(2) cohomology quotients."""

from .gale import (
    GaleDiagram,
    FacetLabeling,
    FaceStructure,
    canonical_weights,
    face_counts,
    face_structure,
    facet_labeling,
    is_face,
    minimal_nonfaces,
    origin_in_hull,
)
from .betti import (
    BettiTable,
    adjacent_sum_multiset,
    beta_first_row,
    betti_table,
    sphere_product_decomposition,
    supports_quasitoric,
    tor_equivalent,
    window_sums,
)
from .petersen import five_cycles, petersen_labels, tor_class
from .charmat import CharMatrixZ2, enumerate_charmats, is_characteristic
from .cohomology import (
    GradedQuotient,
    InvariantProfile,
    codim,
    find_graded_iso,
    ideal_equal,
    invariant_profile,
    order,
    pairwise_iso_matrix,
    quotient_presentation,
)

__all__ = [
    "GaleDiagram",
    "FacetLabeling",
    "FaceStructure",
    "canonical_weights",
    "face_counts",
    "face_structure",
    "facet_labeling",
    "is_face",
    "minimal_nonfaces",
    "origin_in_hull",
    "BettiTable",
    "adjacent_sum_multiset",
    "beta_first_row",
    "betti_table",
    "sphere_product_decomposition",
    "supports_quasitoric",
    "tor_equivalent",
    "window_sums",
    "five_cycles",
    "petersen_labels",
    "tor_class",
    "CharMatrixZ2",
    "enumerate_charmats",
    "is_characteristic",
    "GradedQuotient",
    "InvariantProfile",
    "codim",
    "find_graded_iso",
    "ideal_equal",
    "invariant_profile",
    "order",
    "pairwise_iso_matrix",
    "quotient_presentation",
]

__version__ = "0.1.0"
