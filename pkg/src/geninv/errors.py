"""Exceptions shared across the package."""


class GeninvError(ValueError):
    """Base class for all errors raised by this package."""


class ParseError(GeninvError):
    """Input text does not match the entry grammar."""


class FieldMismatchError(GeninvError):
    """Operands live over different fields."""


class ShapeError(GeninvError):
    """Matrix dimensions are incompatible with the requested operation."""


class SingularMatrixError(GeninvError):
    """Inverse requested of a rank-deficient matrix."""
