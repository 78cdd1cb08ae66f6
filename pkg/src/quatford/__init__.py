"""Unit groups of rational quaternion orders: exact arithmetic, Ford
fundamental domains on the Poincare disc, generators, and covolumes."""

from .arith import (
    Place,
    euler_phi,
    find_companion_prime,
    hilbert_symbol,
    legendre,
    ramification,
    valid_pairs,
)
from .bounds import bound_report, chalk_bounds, entry_bounds, johansson_epsilon
from .domain import (
    FordDomain,
    domain_area,
    ford_domain,
    geodesic_polygon_area,
    reduce_to_domain,
    vertex_cycles,
    word_product,
)
from .geometry import (
    IsometricCircle,
    chalk_norm,
    circle_of,
    classify,
    hutchinson_height,
    isometric_circle,
    to_disc,
)
from .quat import (
    OrderBasis,
    QuatAlgebra,
    Quaternion,
    VolumeReport,
    canonical_algebra,
    canonical_order,
    eichler_invariant,
    eichler_volume,
    is_maximal,
    johansson_volume,
    local_norm_index,
    local_norm_index_at_two,
    reduced_discriminant,
    ternary_form,
)
from .unitgroup import (
    UnitElement,
    binary_representations,
    congruence_filter,
    elements_at_level,
    elements_up_to,
    identity,
)

__all__ = [
    "Place",
    "euler_phi",
    "find_companion_prime",
    "hilbert_symbol",
    "legendre",
    "ramification",
    "valid_pairs",
    "bound_report",
    "chalk_bounds",
    "entry_bounds",
    "johansson_epsilon",
    "FordDomain",
    "domain_area",
    "ford_domain",
    "geodesic_polygon_area",
    "reduce_to_domain",
    "vertex_cycles",
    "word_product",
    "IsometricCircle",
    "chalk_norm",
    "circle_of",
    "classify",
    "hutchinson_height",
    "isometric_circle",
    "to_disc",
    "OrderBasis",
    "QuatAlgebra",
    "Quaternion",
    "VolumeReport",
    "canonical_algebra",
    "canonical_order",
    "eichler_invariant",
    "eichler_volume",
    "is_maximal",
    "johansson_volume",
    "local_norm_index",
    "local_norm_index_at_two",
    "reduced_discriminant",
    "ternary_form",
    "UnitElement",
    "binary_representations",
    "congruence_filter",
    "elements_at_level",
    "elements_up_to",
    "identity",
]

__version__ = "0.1.0"
