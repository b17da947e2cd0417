"""
Exceptions shared across the package
"""


class InternalError(RuntimeError):
    """
    Raised when a computation reaches a state the theory rules out

    Examples are a non-exact division, a normal form that does not terminate
    or an expansion that should exist but has no solution. User mistakes raise
    ValueError instead.
    """
