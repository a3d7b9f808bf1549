"""Exception hierarchy shared by all wheelkit modules."""


class WheelkitError(Exception):
    """Base class for every error raised by wheelkit."""


class ParseError(WheelkitError, ValueError):
    """Input text is not a well-formed edge list or graph6 string."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class StructuralError(WheelkitError, ValueError):
    """A graph does not meet the structural precondition of an operation.

    ``witness`` carries whatever proves the violation, e.g. a cut vertex
    for an input that was required to be 2-connected.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SeparatorExists(StructuralError):
    """A small separator blocks the requested construction."""


class NotWheelFreeError(StructuralError):
    """Raised by the colorers when the input contains a (long) wheel."""


class BudgetExceeded(WheelkitError):
    """A brute-force oracle refused an input larger than its budget."""


class InvariantViolation(WheelkitError, AssertionError):
    """An internal step reached a state that should be impossible."""
