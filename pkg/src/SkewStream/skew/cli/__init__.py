from .dataset import parse_dataset
from .config import ExperimentConfig, load_config, load_drift_spec
from .algorithms import ALGORITHMS, Algorithm
from .runner import COLUMNS, ResultRecord, run_experiment
from .report import emit_report, auc_summary, load_records

__all__ = [
    "parse_dataset", "ExperimentConfig", "load_config", "load_drift_spec",
    "ALGORITHMS", "Algorithm", "COLUMNS", "ResultRecord", "run_experiment",
    "emit_report", "auc_summary", "load_records",
]
