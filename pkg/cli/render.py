"""
chainscope - Report Rendering

JSON output is deterministic: sorted keys, two-space indent, orders as
decimal strings. Text output lays tables out with pandas.
"""

import json
from typing import Any, Dict, List

import pandas as pd
from pydantic import BaseModel


def to_data(obj: Any) -> Any:
    if isinstance(obj, BaseModel):
        return obj.model_dump(mode="json")
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    return obj


def render_json(obj: Any) -> str:
    return json.dumps(to_data(obj), sort_keys=True, indent=2)


def _frame(rows: List[Dict[str, Any]]) -> pd.DataFrame:
    frame = pd.DataFrame(rows)
    for column in frame.columns:
        if frame[column].map(lambda v: isinstance(v, list)).any():
            frame[column] = frame[column].map(lambda v: ",".join(str(x) for x in v) if isinstance(v, list) else v)
    return frame


def render_text(obj: Any) -> str:
    """Scalars as ``key: value`` lines, lists of records as tables."""
    data = to_data(obj)
    if not isinstance(data, dict):
        return str(data)
    scalars, tables, nested = [], [], []
    for key in sorted(data):
        value = data[key]
        if isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
            tables.append((key, _frame(value)))
        elif isinstance(value, dict):
            nested.append((key, value))
        else:
            scalars.append(f"{key}: {value}")
    parts = ["\n".join(scalars)] if scalars else []
    for key, value in nested:
        if value and all(not isinstance(v, (dict, list)) for v in value.values()):
            frame = pd.Series(value, name=key).to_frame()
            parts.append(f"[{key}]\n{frame.to_string()}")
        else:
            parts.append(f"[{key}]\n{render_text(value)}")
    for key, frame in tables:
        parts.append(f"[{key}]\n{frame.to_string(index=False)}")
    return "\n\n".join(parts)


def render(obj: Any, output_format: str = "json") -> str:
    return render_text(obj) if output_format == "text" else render_json(obj)
