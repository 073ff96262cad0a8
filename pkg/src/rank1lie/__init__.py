"""Exact-arithmetic constructions of the rank-one real simple Lie algebras
so(1,k), su(1,k), sp(1,k) and the exceptional one built from octonion
derivations, with restricted root decompositions, flat conformal models,
and a catalog of machine-verified structural identities.

Everything is computed over the rationals with zero tolerances; reports
serialize deterministically for CI.
"""

from .einstein import (ConformalEmbedding, IsotropyReport, build_embedding,
                       null_isotropy, orbit_dimension_table)
from .errors import (BadBasepoint, DegenerateInput, DimensionMismatch,
                     GradingViolation, HypothesisUnsatisfiable, NonSymmetric,
                     NotRankOne, Rank1LieError, SolverInconsistency,
                     UnsupportedParameters)
from .liealg import LieAlgebraQ, RootDecomposition, build_algebra, \
    root_decomposition
from .linalg import Mat, Q, QuadForm, Subspace, kernel, qstr, rank, rref, \
    signature

__version__ = "0.1.0"

__all__ = [
    "BadBasepoint", "ConformalEmbedding", "DegenerateInput",
    "DimensionMismatch", "GradingViolation", "HypothesisUnsatisfiable",
    "IsotropyReport", "LieAlgebraQ", "Mat", "NonSymmetric", "NotRankOne",
    "Q", "QuadForm", "Rank1LieError", "RootDecomposition",
    "SolverInconsistency", "Subspace", "UnsupportedParameters",
    "build_algebra", "build_embedding", "kernel", "null_isotropy",
    "orbit_dimension_table", "qstr", "rank", "root_decomposition", "rref",
    "signature",
]
