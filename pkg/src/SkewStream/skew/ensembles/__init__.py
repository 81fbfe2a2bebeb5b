from .ensemble import BoostRound, Ensemble, LearnerFactory, learner_factory, ensemble_predict, ensemble_score
from .sampling import resample_rate_schedule, weighted_draw
from .smote import DEFAULT_K, neighbor_table, smote, synthesize
from .bagging import bagging_train, underoverbagging_train, smotebagging_train
from .boosting import (
    adaboost_train, adac2_train, csb2_train, rusboost_train, smoteboost_train,
    adaboost_update, adac2_update, csb2_update,
)

__all__ = [
    "BoostRound", "Ensemble", "LearnerFactory", "learner_factory", "ensemble_predict", "ensemble_score",
    "resample_rate_schedule", "weighted_draw",
    "DEFAULT_K", "neighbor_table", "smote", "synthesize",
    "bagging_train", "underoverbagging_train", "smotebagging_train",
    "adaboost_train", "adac2_train", "csb2_train", "rusboost_train", "smoteboost_train",
    "adaboost_update", "adac2_update", "csb2_update",
]
