from .roc import RocCurve, auc_from_scores, operating_point, roc_from_cost_sweep
from .folds import FoldPlan, stratified_kfold, stratified_split
from .prequential import PrequentialResult, prequential_run
from .consistency import ConsistencyReport, consistency_report

__all__ = [
    "RocCurve", "auc_from_scores", "operating_point", "roc_from_cost_sweep",
    "FoldPlan", "stratified_kfold", "stratified_split",
    "PrequentialResult", "prequential_run",
    "ConsistencyReport", "consistency_report",
]
