# secatbounds/__init__.py
from secatbounds.errors import (
    CapExceededError,
    InconsistentBoundsError,
    InputError,
    SecatError,
    VerificationError,
)

__version__ = "1.0.0"
__all__ = ["CapExceededError", "InconsistentBoundsError", "InputError", "SecatError", "VerificationError"]
