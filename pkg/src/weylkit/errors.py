"""Exception types shared across the toolkit."""


class WeylkitError(Exception):
    """Base class for all toolkit-specific errors."""


class PointOnCurve(WeylkitError):
    """Query point is too close to the sampled curve for a reliable answer.

    This signals an ill-posed query (the point is, numerically, on the
    curve), not an internal bug.
    """


class WindingUndefined(WeylkitError):
    """The raw winding sum failed to snap to an integer."""


class DegenerateCurve(WeylkitError):
    """Curve bounding box has (numerically) zero diameter; holes undefined."""


class SizeOutOfRange(WeylkitError):
    """Requested truncation size is outside the supported range."""


class MissingMultiplicity(WeylkitError):
    """An isolated spectral point has no recorded eigenvalue multiplicity."""


class FlagMissing(WeylkitError):
    """A required operator metadata flag is not set on the picture."""


class InternalConsistencyError(WeylkitError):
    """Evaluated properties violate an implication that must always hold."""


class UnknownName(WeylkitError):
    """Requested catalog entry does not exist."""


class ConvergenceFailure(WeylkitError):
    """Eigenvalue computation failed its backward-error certificate."""


class ParseError(WeylkitError):
    """Symbol expression rejected, with byte offset and expected tokens."""

    def __init__(self, message, offset, expected=()):
        self.offset = offset
        self.expected = tuple(expected)
        detail = f"{message} at offset {offset}"
        if self.expected:
            detail += " (expected: " + ", ".join(self.expected) + ")"
        super().__init__(detail)
