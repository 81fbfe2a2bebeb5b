"""
Delimited-text dataset ingestion.

Lines starting with '@' form a KEEL-style preamble and are skipped;
`@attribute <name> ...` lines supply column names. Without a preamble the
first line is taken as a header when none of its feature cells is numeric.
"""

import csv
import logging
import math
from pathlib import Path
from typing import List, Optional, Union

import numpy as np

from ..core.errors import DataError
from ..core.types import Dataset

logger = logging.getLogger(__name__)


def _is_number(cell: str) -> bool:
    try:
        float(cell)
    except ValueError:
        return False
    return True


def _looks_like_header(rows) -> bool:
    numeric = sum(_is_number(c) for c in rows[0][1])
    if numeric == 0:
        return True
    return len(rows) > 1 and numeric < sum(_is_number(c) for c in rows[1][1])


def _resolve_label_column(label_column: Union[int, str], names: Optional[List[str]], width: int) -> int:
    if isinstance(label_column, int) or str(label_column).lstrip('-').isdigit():
        index = int(label_column)
    elif names is not None and label_column in names:
        index = names.index(label_column)
    else:
        raise DataError(f"Label column {label_column!r} not found")
    if not -width <= index < width:
        raise DataError(f"Label column {index} out of range for {width} columns")
    return index % width


def parse_dataset(path: Union[str, Path], label_column: Union[int, str] = -1,
                  positive_label: str = "positive", delimiter: str = ",") -> Dataset:
    path = Path(path)
    if not path.is_file():
        raise DataError(f"Dataset file {path} does not exist")

    names = None
    rows = []
    with open(path, newline='') as f:
        for lineno, row in enumerate(csv.reader(f, delimiter=delimiter), start=1):
            cells = [c.strip() for c in row]
            if not cells or not any(cells):
                continue
            if cells[0].startswith('@'):
                head = cells[0].split()
                if head[0].lower() == '@attribute' and len(head) > 1:
                    names = (names or []) + [head[1]]
                continue
            rows.append((lineno, cells))
    if not rows:
        raise DataError(f"{path} holds no data rows")

    width = len(rows[0][1])
    if names is not None and len(names) != width:
        logger.warning("%s declares %d attributes but rows have %d columns", path, len(names), width)
        names = None
    if names is None and _looks_like_header(rows):
        names = rows[0][1]
        rows = rows[1:]
        if not rows:
            raise DataError(f"{path} holds no data rows")
    label_index = _resolve_label_column(label_column, names, width)

    X, y = [], []
    token = str(positive_label).strip()
    for lineno, cells in rows:
        if len(cells) != width:
            raise DataError(f"expected {width} columns, got {len(cells)}", line=lineno)
        features = []
        for j, cell in enumerate(cells):
            if j == label_index:
                continue
            try:
                value = float(cell)
            except ValueError:
                raise DataError(f"non-numeric feature {cell!r} in column {j}", line=lineno) from None
            if not math.isfinite(value):
                raise DataError(f"non-finite feature {cell!r} in column {j}", line=lineno)
            features.append(value)
        X.append(features)
        y.append(1 if cells[label_index] == token else 0)

    data = Dataset(np.array(X, dtype=np.float64), np.array(y, dtype=np.int8), name=path.stem)
    if data.counts.n_pos == 0 or data.counts.n_neg == 0:
        raise DataError(f"{path} has an empty class (positives={data.counts.n_pos}, negatives={data.counts.n_neg})")
    logger.info("Loaded %s: N=%d d=%d positives=%d", path.name, len(data), data.d, data.counts.n_pos)
    return data
