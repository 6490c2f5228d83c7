"""Exception types shared across the package."""


class DivisorGraphError(Exception):
    """Base class for all library-specific failures."""


class FactorizationLimitError(DivisorGraphError):
    """Trial division hit its sweep bound before n was fully factored."""


class EmptyGraphError(DivisorGraphError):
    """n is 1 or prime, so there are no proper divisors and no graph."""


class TrivialGraphError(DivisorGraphError):
    """n is the square of a prime; the one-vertex graph is outside the
    range the parameter formulas support."""


class SizeCapError(DivisorGraphError):
    """The requested object exceeds a configured size cap."""


class OracleSkipped(DivisorGraphError):
    """A brute-force oracle declined to run because its budget was exceeded.

    This is a signal, never a wrong answer: callers treat it as "result
    unavailable" and must not substitute a guess.
    """


class OpenProblemError(DivisorGraphError):
    """No constructive algorithm is known for the requested case."""
