"""Exception hierarchy shared by every module."""


class SemitorsionError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInput(SemitorsionError, ValueError):
    """Bad user input; the CLI maps these to exit status 2."""


class EmptyGenerators(InvalidInput):
    pass


class NotCoprime(InvalidInput):
    pass


class GenusCapExceeded(InvalidInput):
    pass


class SemigroupMismatch(InvalidInput):
    pass


class PrincipalMaximalIdeal(InvalidInput):
    pass


class NotClosedUnderRing(InvalidInput):
    pass


class FiberTooLarge(InvalidInput):
    pass


class InternalCheckFailure(SemitorsionError):
    """A computed object violated a theorem-level invariant; always a bug."""


class NotARing(InternalCheckFailure):
    pass


class StabilizationFailure(InternalCheckFailure):
    pass


class OracleDisagreement(InternalCheckFailure):
    pass


class NotClosed(InternalCheckFailure):
    pass


class OutputUnwritable(SemitorsionError):
    pass


class ResumeMismatch(SemitorsionError):
    pass
