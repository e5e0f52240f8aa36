"""Exact-arithmetic simplicial Lagrange finite elements.

Everything is computed over arbitrary-precision rationals, so the library's
identities (nodal duality, unisolvence, face factorizations) hold as exact
equalities rather than within a tolerance.
"""

from .errors import (
    DegenerateSimplexError,
    NotVanishingError,
    SingularMatrixError,
    UnknownCheckError,
)
from .exact import mat_det, mat_rank, mat_solve, rat, rat_parse, rat_str
from .multiindex import (
    DEFAULT_ORDER,
    GRADED_ORDERS,
    ORDERS,
    binomial,
    cardinal,
    compare,
    enumerate_indices,
)
from .polynomial import (
    Polynomial,
    compose_affine,
    divide_by_last_variable,
    horner_coefficients,
    lagrange_basis_1d,
    partial_derivative,
    recombine_last_variable,
)
from .geometry import (
    AffineMap,
    affine_apply,
    affine_compose,
    affine_inverse,
    barycentric_polynomials,
    face_hyperplane_contains,
    face_mapping,
    geometric_mapping,
    hyperface_mapping,
    in_reference_simplex,
    in_simplex,
    is_affinely_independent,
    isobarycenter,
    permutation_mapping,
    reference_barycentric,
    reference_vertices,
    vertex_family,
)
from .element import (
    LagrangeElement,
    build_element,
    face_unisolvence,
    factor_on_hyperplane,
    hyperface_transport_consistent,
    lagrange_nodes,
    linear_form,
    nodes_on_hyperplane,
    reference_nodes,
    shape_functions,
    sub_nodes_coincide,
    sub_vertices,
    vandermonde_matrix,
    is_unisolvent,
)
from .verify import random_independent_family, run_suite

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
