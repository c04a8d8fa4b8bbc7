"""Exception hierarchy shared by the library and the command line."""


class NecklaceError(Exception):
    """Base class for every error raised by this package."""


class InvalidParamsError(NecklaceError, ValueError):
    """(s, n, k) violate s >= 2, n >= 1, k >= 1 or the divisibility requirement."""


class InvalidInputError(NecklaceError, ValueError):
    """A word, pair or residue is malformed for the given parameters."""


class PreconditionError(NecklaceError, ValueError):
    """An operation was called outside the mode or residue it is defined for."""


class DomainError(NecklaceError, ValueError):
    """theta at the all-zero word, or its inverse at the all-(s-1) word."""


class NoPredecessorError(NecklaceError, ValueError):
    """No factorization exists that would make the word a theta image."""


class CapacityError(NecklaceError):
    """A size guard or integer limit would be exceeded."""


class BudgetExceededError(CapacityError):
    """The exhaustive search visited more nodes than it was allowed to."""


class SearchExhaustedError(NecklaceError):
    """The exhaustive search finished without finding a perfect necklace."""


class TheoremViolation(NecklaceError, AssertionError):
    """A property guaranteed by the construction failed to hold at runtime."""
