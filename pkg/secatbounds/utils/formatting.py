# secatbounds/utils/formatting.py
"""
Rendering of report dicts. JSON is the machine format; text is a rendering of
the same dict, with lists of flat records shown as tables.
"""
import json
from typing import Any

import pandas as pd

_INDENT = "  "


def to_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _is_scalar(v: Any) -> bool:
    return v is None or isinstance(v, (str, int, float, bool))


def _is_record_list(v: Any) -> bool:
    """A non-empty list of dicts whose values are all scalars or short scalar lists."""
    if not isinstance(v, list) or not v or not all(isinstance(x, dict) for x in v):
        return False
    return all(
        _is_scalar(val) or (isinstance(val, list) and all(_is_scalar(e) for e in val))
        for row in v for val in row.values()
    )


def _cell(v: Any) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_cell(e) for e in v) + "]"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return "" if v is None else str(v)


def records_table(rows: list[dict]) -> str:
    columns: list[str] = []
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    frame = pd.DataFrame([{c: _cell(row.get(c)) for c in columns} for row in rows], columns=columns)
    return frame.to_string(index=False)


def _render(value: Any, depth: int, lines: list[str]) -> None:
    pad = _INDENT * depth
    if isinstance(value, dict):
        for key in sorted(value):
            item = value[key]
            if _is_scalar(item):
                lines.append(f"{pad}{key}: {_cell(item)}")
            elif isinstance(item, list) and all(_is_scalar(e) for e in item):
                lines.append(f"{pad}{key}: {_cell(item)}")
            elif _is_record_list(item):
                lines.append(f"{pad}{key}:")
                lines.extend(pad + _INDENT + row for row in records_table(item).splitlines())
            else:
                lines.append(f"{pad}{key}:")
                _render(item, depth + 1, lines)
    elif isinstance(value, list):
        for i, item in enumerate(value):
            if _is_scalar(item):
                lines.append(f"{pad}- {_cell(item)}")
            else:
                lines.append(f"{pad}[{i}]")
                _render(item, depth + 1, lines)
    else:
        lines.append(f"{pad}{_cell(value)}")


def to_text(report: dict) -> str:
    lines: list[str] = []
    _render(report, 0, lines)
    return "\n".join(lines) + "\n"


def render(report: dict, fmt: str = "json") -> str:
    if fmt == "text":
        return to_text(report)
    return to_json(report)
