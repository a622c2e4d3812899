"""Exception hierarchy shared by all tridots modules."""


class TridotsError(Exception):
    """Base class for every error raised by this package."""


class DomainError(TridotsError, ValueError):
    """Invalid input: board size out of range, cell off the board, malformed data."""


class SizeCapError(TridotsError):
    """Requested size exceeds the configured solver cap; refused, not attempted."""


class PivotLimitError(TridotsError, RuntimeError):
    """Simplex exceeded its pivot budget.

    Bland's rule guarantees termination, so hitting this limit indicates a
    solver bug rather than a hard problem.
    """


class InfeasibleCertificateError(TridotsError, RuntimeError):
    """A certificate built by this library failed its own feasibility check.

    The construction is proven feasible for every n, so this is a bug signal,
    never a user error.
    """
