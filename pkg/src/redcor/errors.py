"""Exception types shared across the library."""


class RedcorError(Exception):
    """Base class for all library errors."""


class MixedRings(RedcorError):
    """Operands belong to different base rings."""


class IllFormed(RedcorError):
    """Matrix or map data disagrees with the stated presentations."""


class UnsupportedRing(RedcorError):
    """The operation is not defined over this base ring."""


class UnsupportedQuery(RedcorError):
    """The question is not effectively decidable with the given data."""


class TooLarge(RedcorError):
    """An enumeration would exceed the configured size cap."""


class InfiniteModule(RedcorError):
    """Exhaustive enumeration requested for an infinite module."""


class BoundExceeded(RedcorError):
    """A tower failed to stabilize within a bound that should suffice."""


class PredicateFailed(RedcorError):
    """A precondition predicate (reduced / coreduced) does not hold."""


class OutOfRange(RedcorError):
    """Degree index outside the complex's interval."""


class BadExponents(RedcorError):
    """Transition exponents must satisfy j >= i >= 1."""


class EmptySequence(RedcorError):
    """A Koszul complex needs at least one ring element."""


class ParseError(RedcorError):
    """Malformed element string or workspace file."""


class SchemaVersionMismatch(RedcorError):
    """Workspace file written under an incompatible schema version."""
