"""Exception hierarchy for the sopfault package.

Every error that can cross the library boundary subclasses SopFaultError,
so callers (service layer, CLI) can catch one type and map it to an exit
code or HTTP status. Class names double as stable error codes in rendered
output.
"""


class SopFaultError(Exception):
    """Base class for all sopfault errors."""


class ParseError(SopFaultError):
    """Base class for expression parsing errors."""


class EmptyTerm(ParseError):
    pass


class InvalidCharacter(ParseError):
    pass


class DoubleComplement(ParseError):
    pass


class DuplicateVariableInTerm(ParseError):
    pass


class TooManyVariables(ParseError):
    pass


class RowOutOfRange(SopFaultError):
    pass


class DimensionOverflow(SopFaultError):
    pass


class InternalInconsistency(SopFaultError):
    """A structural guarantee was violated; signals a bug, not bad input."""


class NoSplittingRow(SopFaultError):
    """No remaining test splits the active column set; signals a bug."""


class NotDistinguishing(SopFaultError):
    """A test set expected to separate all fault columns does not."""


class UnknownFaultId(SopFaultError):
    pass


class LimitExceeded(SopFaultError):
    """Exact search refused: the table is larger than the configured limits."""


class Infeasible(SopFaultError):
    """Exhaustive search proved no solution exists; signals a bug upstream."""
