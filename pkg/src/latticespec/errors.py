"""Exception hierarchy.

Bad input raises a subclass of :class:`InputError` (a ``ValueError``);
a broken internal consistency check raises :class:`InvariantViolation`.
"""


class InputError(ValueError):
    """Input rejected by a precondition."""


class DimensionError(InputError):
    pass


class SingularMatrixError(InputError):
    pass


class NotPrimitiveError(InputError):
    pass


class OriginNotInteriorError(InputError):
    pass


class SimplicialityError(InputError):
    pass


class ShapeError(InputError):
    """A simplex was required but the polytope has more vertices."""


class ReducednessError(InputError):
    pass


class DomainError(InputError):
    """Operation not defined for this input (e.g. non-reflexive weights)."""


class InvariantViolation(RuntimeError):
    """An internal cross-check failed; this is a bug, not bad input."""
