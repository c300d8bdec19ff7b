"""Exception types shared across the package."""


class AlphaharmError(Exception):
    """Base class for all package-specific errors."""


class DomainError(AlphaharmError):
    """Input is outside the mathematical domain of the operation."""


class NonConvergent(AlphaharmError):
    """Series failed to satisfy its stopping rule within the term cap."""


class InvalidC(DomainError):
    """Hypergeometric parameter c is a nonpositive integer."""


class DecompositionFailure(AlphaharmError):
    """Exact decomposition left a nonzero residual."""


class IllConditioned(AlphaharmError):
    """Extrapolation stages disagree beyond the requested tolerance."""


class AngleDegenerate(AlphaharmError):
    """Every available working angle evaluates too close to zero."""


class NonPositiveCoefficient(DomainError):
    """Coefficient sequence must be strictly positive."""


class NoConvergence(AlphaharmError):
    """Iterative root refinement did not reach the residual target."""


class EmptyFamily(DomainError):
    """Angle family has no members."""


class NotAdmissible(AlphaharmError):
    """Angle family fails the admissibility requirement."""


class HypothesisViolation(AlphaharmError):
    """Construction hypothesis fails at a specific index."""

    def __init__(self, k: int, message: str | None = None):
        self.k = k
        super().__init__(message or f"construction hypothesis fails at index {k}")


class UncomparableRepresentation(AlphaharmError):
    """Membership of an irrational angle cannot be decided from labels."""


class StepLimit(AlphaharmError):
    """Internal iteration exceeded its step budget."""
