"""Exact homology of symmetric products, truncated symmetric products and braid spaces."""

from .braid import (
    CohomologyTable,
    SpaceDescriptor,
    braid_orientable,
    compositions,
    dualize,
    les_consistency,
    split_closed,
    split_punctures,
)
from .chain import (
    ChainComplex,
    cohomological_dimension,
    homological_connectivity,
    homology,
    relative_homology,
)
from .errors import (
    BraidHomError,
    BudgetExceeded,
    CatalogError,
    CoefficientPolicyError,
    HypothesisError,
    NotASubcomplexError,
    TwistedCoefficientsError,
)
from .groups import F2, TWISTED, ZZ, Coefficients, Fp, GradedAbelianGroup
from .linalg import SparseMatrix, rank_mod_p, smith_normal_form
from .sp2 import SpCell, TwoComplexPresentation, build_sp_model, reduced_sp_model
from .tp import ReducedTpTable, bcm_e1_connectivity, lm_split_check, reduced_tp_wedge, tp_circle_complex

__version__ = "0.1.0"
