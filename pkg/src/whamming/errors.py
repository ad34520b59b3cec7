"""Exception hierarchy shared by every module."""

from __future__ import annotations

DEFAULT_CAP = 10**6


class WhammingError(ValueError):
    """Base class for all library errors."""


class FieldError(WhammingError):
    """Invalid field parameters or mixed-field operands."""


class CapExceededError(WhammingError):
    """An enumeration would exceed the configured cap."""

    def __init__(self, what: str, size: int, cap: int) -> None:
        super().__init__(f"{what}: {size} items exceeds enumeration cap {cap}")
        self.size = size
        self.cap = cap


class PreconditionError(WhammingError):
    """An operation's precondition does not hold.

    ``witness`` carries whatever object demonstrates the violation (a
    projective point, a UDP counterexample, ...), so callers can report it.
    """

    def __init__(self, message: str, witness=None) -> None:
        super().__init__(message)
        self.witness = witness


class InstanceError(WhammingError):
    """Malformed instance document."""


def check_cap(what: str, size: int, cap: int | None) -> None:
    if cap is None:
        cap = DEFAULT_CAP
    if size > cap:
        raise CapExceededError(what, size, cap)
