"""Exception types shared by all modules.

Every error raised for invalid mathematical input derives from DomainError,
which the command line maps to exit code 1.
"""


class DomainError(ValueError):
    pass


class NotOSequence(DomainError):
    pass


class NotSISequence(DomainError):
    pass


class CodimTooSmall(DomainError):
    pass


class NotLexSegment(DomainError):
    pass


class DegreeExceedsT(DomainError):
    pass


class SocleTooSmall(DomainError):
    pass


class NotSubconfiguration(DomainError):
    pass


class NotDominated(DomainError):
    pass


class RegularityHypothesisViolated(DomainError):
    pass


class SocleParity(DomainError):
    pass


class NotPure(DomainError):
    pass


class ScaleExceeded(DomainError):
    pass


class ContextMismatch(DomainError):
    pass


class OracleDisagreement(RuntimeError):
    """Two independent computations disagree: a bug, not bad input."""
