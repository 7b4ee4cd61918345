"""Exception types raised across the package."""


class LSObstructError(ValueError):
    """Base class for every domain error raised by :mod:`lsobstruct`."""


class EmptyPolynomial(LSObstructError):
    pass


class NotLSpaceForm(LSObstructError):
    """The polynomial does not have the +-1 staircase shape of an L-space knot."""

    def __init__(self, condition, detail=""):
        self.condition = condition
        self.detail = detail
        msg = condition if not detail else f"{condition}: {detail}"
        super().__init__(msg)


class DegenerateSequence(LSObstructError):
    pass


class InvalidJump(LSObstructError):
    pass


class InconsistentParity(LSObstructError):
    pass


class UnsupportedParity(LSObstructError):
    """Interval formulas are only available for an even number of jumps."""


class GenusMismatch(LSObstructError):
    pass


class DegenerateIntervals(LSObstructError):
    pass


class IndexOutOfRange(LSObstructError):
    pass


class LabelOutOfRange(LSObstructError):
    pass


class SlopeTooSmall(LSObstructError):
    """Surgery slope below 2g - 1, where the d-invariant formula is not guaranteed."""


class NoSquareFreeCandidate(LSObstructError):
    pass


class KnotParseError(LSObstructError):
    """Malformed knot input; ``field`` / ``line`` locate the problem when known."""

    def __init__(self, message, field=None, line=None):
        self.field = field
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        if where:
            message = f"{', '.join(where)}: {message}"
        super().__init__(message)
