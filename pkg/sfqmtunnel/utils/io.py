"""
Deterministic table serialization.
"""
import io
import json
from typing import Any, Dict, Iterable, Optional

import numpy as np
import pandas as pd

SCHEMA_VERSION = 'sfqmtunnel-table/1'
FLOAT_FORMAT = '%.17g'


def _builtin(value: Any) -> Any:
    if isinstance(value, np.generic):
        return value.item()
    return value


def to_csv_text(table: pd.DataFrame, comments: Iterable[str] = ()) -> str:
    """
    Renders a table as CSV with 17 significant digits and '\\n' line endings.

    Args:
        table: The table.
        comments: Lines emitted before the header, each prefixed with '# '.

    Returns:
        The CSV text, starting with the schema version line.
    """
    buffer = io.StringIO()
    buffer.write('# schema: %s\n' % SCHEMA_VERSION)
    for line in comments:
        buffer.write('# %s\n' % line)
    table.to_csv(buffer, index=False, float_format=FLOAT_FORMAT, lineterminator='\n')
    return buffer.getvalue()


def to_json_text(table: pd.DataFrame, meta: Optional[Dict[str, Any]] = None) -> str:
    """
    Renders a table as a JSON document of records.

    Args:
        table: The table.
        meta: Additional metadata stored next to the rows.

    Returns:
        The JSON text with sorted keys.
    """
    rows = [{column: _builtin(value) for column, value in record.items()}
            for record in table.to_dict(orient='records')]
    document = {'schema': SCHEMA_VERSION, 'columns': list(table.columns), 'rows': rows}
    if meta:
        document['meta'] = {key: _builtin(value) for key, value in meta.items()}

    return json.dumps(document, indent=2) + '\n'


def read_csv_table(path_or_buffer) -> pd.DataFrame:
    """
    Reads a table written by to_csv_text, skipping the comment lines.
    """
    return pd.read_csv(path_or_buffer, comment='#')


def write_text(text: str, path: Optional[str]) -> None:
    """
    Writes text to a file, or to standard output when path is None.
    """
    if path is None:
        print(text, end='')
        return
    with open(path, 'w', newline='\n') as f:
        f.write(text)
