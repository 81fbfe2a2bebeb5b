from .record_log import RecordLog, read_records

__all__ = ["RecordLog", "read_records"]
