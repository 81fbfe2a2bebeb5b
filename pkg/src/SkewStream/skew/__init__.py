__version__ = "0.1.0"

from .core.types import Dataset, LabeledInstance, ClassCounts
from .core.costs import CostSpec, cost_grid
from .core.rng import RngStream
from .learners.gaussian_learners import make_learner

from .ensembles.ensemble import Ensemble
from .ensembles.bagging import bagging_train, underoverbagging_train, smotebagging_train
from .ensembles.boosting import adaboost_train, adac2_train, csb2_train, rusboost_train, smoteboost_train

from .online.bagging import OnlineBagging, OnlineUnderOverBagging, OnlineSMOTEBagging
from .online.boosting import OnlineBoosting, OnlineAdaC2, OnlineCSB2, OnlineRUSBoost, OnlineSMOTEBoost

from .drift.generators import DriftStreamSpec, generate
from .drift.forgetting import ForgettingConfig

from .eval.roc import auc_from_scores
from .eval.prequential import prequential_run
from .storage.record_log import RecordLog

__all__ = [
    "Dataset",
    "LabeledInstance",
    "ClassCounts",
    "CostSpec",
    "cost_grid",
    "RngStream",
    "make_learner",
    "Ensemble",
    "bagging_train",
    "underoverbagging_train",
    "smotebagging_train",
    "adaboost_train",
    "adac2_train",
    "csb2_train",
    "rusboost_train",
    "smoteboost_train",
    "OnlineBagging",
    "OnlineUnderOverBagging",
    "OnlineSMOTEBagging",
    "OnlineBoosting",
    "OnlineAdaC2",
    "OnlineCSB2",
    "OnlineRUSBoost",
    "OnlineSMOTEBoost",
    "DriftStreamSpec",
    "generate",
    "ForgettingConfig",
    "auc_from_scores",
    "prequential_run",
    "RecordLog",
]
