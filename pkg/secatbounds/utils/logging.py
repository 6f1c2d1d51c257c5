# secatbounds/utils/logging.py
import logging
import sys
from typing import Optional

from secatbounds.errors import InputError

_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def setup_logging(level: str = "INFO", fmt: Optional[str] = None) -> None:
    """Configure the root logger once; reports go to stdout, logs to stderr."""
    name = level.upper()
    if name not in _LEVELS:
        raise InputError(f"unknown log level {level!r}", field="--log-level")
    logging.basicConfig(
        level=getattr(logging, name),
        format=fmt or "%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )
    # numpy and pandas stay quiet below WARNING
    for noisy in ("numpy", "pandas"):
        logging.getLogger(noisy).setLevel(max(logging.WARNING, getattr(logging, name)))
