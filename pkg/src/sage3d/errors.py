"""Shared exception types.

Invalid arguments raise plain ValueError. The two extra classes let the
CLI map failures to distinct exit codes (2 for misuse, 3 for numeric
breakdown).
"""


class NumericError(RuntimeError):
    """A computation produced NaN/Inf or otherwise left the finite domain."""


class InvalidStateError(RuntimeError):
    """An operation was called in a mode that cannot support it."""
