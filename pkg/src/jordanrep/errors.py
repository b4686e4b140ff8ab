"""Exception types shared across the package."""


class JordanRepError(Exception):
    """Base class for all package-specific errors."""


class DimensionMismatch(JordanRepError):
    """Matrix operands have incompatible shapes."""


class NotNilpotent(JordanRepError):
    """A matrix passed to a terminating-series evaluation is not nilpotent."""


class NonUnitConstantTerm(JordanRepError):
    """Series inversion/composition received an argument with the wrong constant term."""


class BadParity(JordanRepError):
    """Composition enumeration asked for an odd total or an odd number of parts."""


class MissingElement(JordanRepError):
    """A recursion step referenced a matrix element not yet present in the table."""


class SingularLeadingElement(JordanRepError):
    """A diagonal coefficient of the triangular singular-vector system vanished."""


class IllFormedComposition(JordanRepError):
    """A series function was applied to an operator argument of zero valuation."""


class ZeroOmega(JordanRepError):
    """The spectrum scan needs a nonzero deformation parameter."""
