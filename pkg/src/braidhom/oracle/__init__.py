"""Brute-force ground truth: symmetric and truncated products of small simplicial complexes."""

from .complex import (
    BUDGET_ENV,
    BUILTINS,
    DEFAULT_BUDGET_F2,
    DEFAULT_BUDGET_Z,
    SimplicialComplex,
    circle,
    default_budget,
    figure_eight,
    interval,
    load_space,
    point,
    sphere_boundary,
    torus,
    wedge,
)
from .quotient import (
    MODES,
    GroupComplex,
    QuotientComplex,
    barycentric_subdivision,
    is_regular,
    oracle_homology,
    oracle_relative,
    orbit_quotient,
    product_triangulation,
    quotient_space,
    reduced_truncated_product,
    regularize,
    sp_cells,
    symmetric_product,
    truncated_product,
)

__all__ = [
    "BUDGET_ENV", "BUILTINS", "DEFAULT_BUDGET_F2", "DEFAULT_BUDGET_Z", "SimplicialComplex",
    "circle", "default_budget", "figure_eight", "interval", "load_space", "point",
    "sphere_boundary", "torus", "wedge", "MODES", "GroupComplex", "QuotientComplex",
    "barycentric_subdivision", "is_regular", "oracle_homology", "oracle_relative",
    "orbit_quotient", "product_triangulation", "quotient_space", "reduced_truncated_product",
    "regularize", "sp_cells",
    "symmetric_product", "truncated_product",
]
