"""Exception hierarchy.

``PreconditionViolated`` subclasses describe bad input (CLI exit code 2);
``InternalError`` subclasses describe states the construction promises never
to reach (exit code 3).
"""


class DichromaError(Exception):
    """Base class for all errors raised by the package."""


class PreconditionViolated(DichromaError):
    """Input does not satisfy the operation's precondition."""


class InternalError(DichromaError):
    """An invariant of the construction failed; carries diagnostics."""

    def __init__(self, message, **diagnostics):
        super().__init__(message)
        self.diagnostics = diagnostics


class PartialColouring(PreconditionViolated):
    pass


class NotPlanar(PreconditionViolated):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotOriented(PreconditionViolated):
    pass


class DigirthTooSmall(PreconditionViolated):
    pass


class NotTwoConnected(PreconditionViolated):
    pass


class NotTriangulation(PreconditionViolated):
    pass


class DegenerateLink(PreconditionViolated):
    pass


class OverlapNotTournament(PreconditionViolated):
    pass


class ColouringsDisagree(PreconditionViolated):
    pass


class TooLarge(PreconditionViolated):
    pass


class NotACut(InternalError):
    pass


class MergedInvalid(InternalError):
    pass


class InternalVerificationFailed(InternalError):
    pass


class SearchExhausted(InternalError):
    pass


class SearchBudgetExceeded(InternalError):
    pass


class GenerationFailed(DichromaError):
    pass


class ParseError(PreconditionViolated):
    """A file does not follow its documented format."""
