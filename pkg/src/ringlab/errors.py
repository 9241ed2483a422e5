"""Exception types shared across the package."""


class RinglabError(Exception):
    """Base class for all errors raised by this package."""


class RingSpecError(RinglabError):
    """Malformed ring specification (bad family, n, q or p)."""


class ExprError(RinglabError):
    """Element or subset expression could not be parsed or evaluated."""


class NonEnumerableError(RinglabError):
    """An enumeration-based operation was invoked on an infinite ring."""


class HypothesisError(RinglabError):
    """An operation's declared preconditions are not met."""


class UnknownCheckError(RinglabError):
    """A check id is not registered."""
