"""Exception types shared across the package."""


class Rank1LieError(Exception):
    """Base class for all package-specific errors."""


class NonSymmetric(Rank1LieError):
    """A quadratic-form operation received a non-symmetric Gram matrix."""


class DimensionMismatch(Rank1LieError):
    """Operands have incompatible shapes or ambient dimensions."""


class UnsupportedParameters(Rank1LieError):
    """Algebra family or parameter out of the supported range."""


class NotRankOne(Rank1LieError):
    """No Cartan-subspace generator with the expected eigenvalue grid was found."""


class GradingViolation(Rank1LieError):
    """Eigenspace brackets landed outside the expected root grading."""


class SolverInconsistency(Rank1LieError):
    """An exactly-verified linear solve contradicts a structural requirement."""


class BadBasepoint(Rank1LieError):
    """The selected null direction fails the isotropy-model assertions."""


class DegenerateInput(Rank1LieError):
    """A construction needs a nondegenerate form or independent vectors."""


class HypothesisUnsatisfiable(Rank1LieError):
    """No configuration satisfying a lemma's hypotheses exists for the input."""
