"""Exception types raised across the package."""


class STCutError(Exception):
    """Base class for all package errors."""


class ValidationError(STCutError, ValueError):
    """A Problem violates one of its invariants."""


class AsymmetricWeights(ValidationError):
    pass


class NegativeWeight(ValidationError):
    pass


class NonzeroDiagonal(ValidationError):
    pass


class BadTerminals(ValidationError):
    pass


class BadSize(ValidationError):
    pass


class WrongLength(STCutError, ValueError):
    pass


class NonUnitEntry(STCutError, ValueError):
    pass


class ParseError(STCutError, ValueError):
    """Malformed graph file. ``line`` is 1-based."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DuplicateEdge(ParseError):
    pass


class OutOfRangeIndex(ParseError):
    pass


class OutOfBox(STCutError, ValueError):
    """A point lies on or outside the barrier box (-q/p, q/p)^n."""


class ConstraintViolated(STCutError, ValueError):
    """A point does not satisfy x_s + x_t = 0."""


class StageStalled(STCutError, RuntimeError):
    """Inner loop hit its iteration cap before reaching tolerance."""


class TooLarge(STCutError, ValueError):
    """Instance too large for exhaustive enumeration."""


class ExactTooLarge(TooLarge):
    pass


class DomainError(STCutError, ValueError):
    """A finite-difference probe left the function's domain."""


class NoBracket(STCutError, ValueError):
    pass
