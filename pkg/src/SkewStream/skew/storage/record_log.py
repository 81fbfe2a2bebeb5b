import json
import os
import threading
from typing import Iterable, List


class RecordLog:
    """Append-only JSON-lines file of result records."""

    def __init__(self, path: str, truncate: bool = False):
        self.path = path
        self.lock = threading.RLock()
        directory = os.path.dirname(path)
        if directory and not os.path.isdir(directory):
            os.makedirs(directory, exist_ok=True)
        self.file = open(self.path, 'wb' if truncate else 'ab')

    def extend(self, records: Iterable[dict]):
        with self.lock:
            for record in records:
                self.file.write((json.dumps(record) + '\n').encode('utf-8'))
            self.file.flush()
            os.fsync(self.file.fileno())

    def close(self):
        with self.lock:
            if self.file:
                self.file.close()
                self.file = None

    def __enter__(self) -> "RecordLog":
        return self

    def __exit__(self, *exc):
        self.close()


def read_records(path: str) -> List[dict]:
    records = []
    if not os.path.exists(path):
        return records
    with open(path, 'rb') as f:
        for line in f:
            line = line.strip()
            if line:
                records.append(json.loads(line.decode('utf-8')))
    return records
