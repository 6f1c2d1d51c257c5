from .formatting import render, records_table, to_json, to_text
from .logging import setup_logging

__all__ = ["render", "records_table", "setup_logging", "to_json", "to_text"]
