"""
Rendering of command results as text tables, CSV or JSON.

Commands hand over plain row dictionaries. Big integers arrive already
converted to decimal strings, so no consumer ever sees a float or an overflowed
machine integer.
"""

import json
from collections.abc import Mapping, Sequence

import pandas as pd
from pydantic import BaseModel

from caystir.schemas import OutputFormat

Row = Mapping[str, object]


def render(
    rows: Sequence[Row],
    fmt: OutputFormat,
    *,
    document: BaseModel | None = None,
    title: str | None = None,
) -> str:
    """
    Render rows in the requested format.

    Args:
        rows: One mapping per output row, all with the same keys.
        fmt: table, csv or json.
        document: Pydantic document to emit instead of the rows for json.
        title: Heading printed above the table (table format only).
    """
    if fmt is OutputFormat.JSON:
        if document is not None:
            return document.model_dump_json(indent=2)
        return json.dumps([dict(row) for row in rows], indent=2)

    frame = pd.DataFrame.from_records([dict(row) for row in rows])
    if fmt is OutputFormat.CSV:
        return frame.to_csv(index=False).rstrip("\n")

    body = frame.to_string(index=False) if rows else "(no rows)"
    return f"{title}\n{body}" if title else body
