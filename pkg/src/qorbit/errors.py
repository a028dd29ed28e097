"""Exception hierarchy shared by every qorbit module."""


class QorbitError(Exception):
    """Base class for all qorbit errors."""


class DomainError(QorbitError, ValueError):
    """An argument lies outside the domain of the operation."""


class MembershipError(QorbitError, ValueError):
    """(a, c, n) does not give an integer b = (a^2 - n) / c."""


class PrimitivityError(QorbitError, ValueError):
    """gcd(a, b, c) > 1."""


class NonTerminationError(QorbitError, RuntimeError):
    """An iteration exceeded its step cap."""


class AmbiguityBranchError(QorbitError, RuntimeError):
    """Closed-path traversal found zero or two ambiguous successors."""


class NonClosureError(QorbitError, RuntimeError):
    """Closed-path traversal failed to return to its start."""
