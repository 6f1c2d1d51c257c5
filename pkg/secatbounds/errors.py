# secatbounds/errors.py
"""Exception hierarchy shared by all engines.

Library code raises; only ``main.py`` turns these into exit codes.
"""
from typing import Any, Optional


class SecatError(Exception):
    """Base class for every error raised by secatbounds."""


class InputError(SecatError):
    """Malformed or inconsistent user input. ``field`` points at the offending entry."""

    def __init__(self, message: str, field: Optional[str] = None):
        super().__init__(message)
        self.field = field

    def __str__(self) -> str:
        base = super().__str__()
        return f"{base} (at {self.field})" if self.field else base


class InvalidGroupError(InputError):
    pass


class NotSurjectiveError(InputError):
    pass


class NotNormalError(InputError):
    pass


class DegreeError(InputError):
    """Requested degree lies outside what the resolution was built for."""


class TorsionCoefficientsError(InputError):
    pass


class CapExceededError(SecatError):
    """A configured size cap would be exceeded."""

    def __init__(self, cap: str, value: int, limit: int):
        super().__init__(f"cap '{cap}' exceeded: {value} > {limit}")
        self.cap = cap
        self.value = value
        self.limit = limit


class VerificationError(SecatError):
    """An identity the engine asserts did not hold."""

    def __init__(self, message: str, counterexample: Optional[dict[str, Any]] = None):
        super().__init__(message)
        self.counterexample = counterexample or {}


class InconsistentBoundsError(SecatError):
    """Two rules produced disjoint intervals for the same quantity."""
