"""Exception types shared across the toolkit.

The CLI maps these onto exit codes: input/validation problems exit 2,
unmet mathematical hypotheses exit 1.
"""


class ToricError(Exception):
    """Base class for all toolkit errors."""


class InvalidRayError(ToricError):
    """A ray generator is zero or otherwise unusable."""


class StrongConvexityError(ToricError):
    """A cone contains a line."""


class FanValidationError(ToricError):
    """A collection of cones violates the fan axioms."""


class ShapeError(ToricError):
    """Matrix or vector dimensions do not match."""


class HypothesisError(ToricError):
    """A mathematical hypothesis of the requested operation is not met."""


class UnsupportedShapeError(ToricError):
    """The input falls outside the shapes for which the criterion is proved.

    Raised by the convex-support test on fans whose support is not pure
    full-dimensional after span reduction; callers report it as
    "not-certified" rather than coercing it to a boolean.
    """
