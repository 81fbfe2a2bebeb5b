from .state import BoostLearnerState
from .online_smote import PositiveBuffer, online_smote
from .online_interface import OnlineEnsemble
from .bagging import (
    OnlineBagging, OnlineUnderOverBagging, OnlineSMOTEBagging,
    online_bagging_update, online_uob_update, online_smotebagging_update,
)
from .boosting import (
    OnlineBoosting, OnlineAdaC2, OnlineCSB2, OnlineRUSBoost, OnlineSMOTEBoost,
    online_boosting_update, online_adac2_update, online_csb2_update,
    online_rusboost_update, online_smoteboost_update,
)

__all__ = [
    "BoostLearnerState", "PositiveBuffer", "online_smote", "OnlineEnsemble",
    "OnlineBagging", "OnlineUnderOverBagging", "OnlineSMOTEBagging",
    "online_bagging_update", "online_uob_update", "online_smotebagging_update",
    "OnlineBoosting", "OnlineAdaC2", "OnlineCSB2", "OnlineRUSBoost", "OnlineSMOTEBoost",
    "online_boosting_update", "online_adac2_update", "online_csb2_update",
    "online_rusboost_update", "online_smoteboost_update",
]
