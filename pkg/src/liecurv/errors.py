"""Exception types shared across the library."""


class LieCurvError(Exception):
    """Base class for all liecurv errors."""


class DimensionMismatch(LieCurvError):
    """Operands differ in size or scalar field, or do not fit a structure."""


class Overflow(LieCurvError):
    """An intermediate matrix left the representable floating-point range."""


class NotPureType(LieCurvError):
    """An input mixes the symmetric-like and skew-like components beyond tolerance."""


class DegenerateSection(LieCurvError):
    """The two vectors are (numerically) linearly dependent; no 2-plane is spanned."""


class NotCommuting(LieCurvError):
    """A commutator norm exceeds the commuting tolerance."""


class TangentNotInAlgebra(LieCurvError):
    """A tangent vector is not in the subgroup's Lie algebra."""


class UnknownGroup(LieCurvError):
    """Unrecognized built-in subgroup name."""


class IncompleteBasis(LieCurvError):
    """A basis does not span the algebra (wrong element count)."""
