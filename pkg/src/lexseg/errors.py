"""Exception hierarchy for the lexseg library."""


class LexsegError(Exception):
    """Base class for all library errors."""


class InvalidInputError(LexsegError, ValueError):
    """An argument violates an operation's precondition."""


class UnitMonomialError(InvalidInputError):
    """Operation is undefined on the degree-zero (unit) monomial."""


class NoPredecessorError(InvalidInputError):
    """The lex-largest monomial of its graded piece has no predecessor."""


class NoSuccessorError(InvalidInputError):
    """The lex-smallest monomial of its graded piece has no successor."""


class InvalidRepError(InvalidInputError):
    """Coefficient sequence is not strictly decreasing and nonnegative."""


class MonomialParseError(InvalidInputError):
    """Malformed monomial text; carries the offending character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ResourceLimitError(LexsegError):
    """An enumeration would exceed the configured size cap."""


class InternalConsistencyError(LexsegError):
    """A guaranteed invariant failed; indicates a bug, not bad input."""
