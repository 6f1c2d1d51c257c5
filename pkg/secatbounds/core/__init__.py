# secatbounds/core/__init__.py
from .request import EXIT_INPUT, EXIT_OK, EXIT_VERIFICATION, Dispatcher, Request, dispatch
from .verify import SuiteResult, Verifier, verify_report

__all__ = [
    "EXIT_INPUT", "EXIT_OK", "EXIT_VERIFICATION", "Dispatcher", "Request", "SuiteResult", "Verifier",
    "dispatch", "verify_report",
]
