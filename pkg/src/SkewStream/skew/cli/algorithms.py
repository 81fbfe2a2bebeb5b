"""Algorithm registry: one entry per id, with its batch trainer, online class and cost grid."""

from dataclasses import dataclass
from typing import Callable, Optional

from ..core.costs import GridKind
from ..ensembles import (
    adaboost_train, adac2_train, bagging_train, csb2_train, rusboost_train,
    smotebagging_train, smoteboost_train, underoverbagging_train,
)
from ..online import (
    OnlineAdaC2, OnlineBagging, OnlineBoosting, OnlineCSB2, OnlineRUSBoost,
    OnlineSMOTEBagging, OnlineSMOTEBoost, OnlineUnderOverBagging,
)


@dataclass(frozen=True)
class Algorithm:
    id: str
    # (data, M, cost, k, rng, learner) -> Ensemble
    batch: Callable
    # (d, M, cost, learner, forgetting, k) -> OnlineEnsemble
    online: Callable
    grid: Optional[GridKind]


def _online(cls, **fixed):
    def build(d, M, cost, learner, forgetting, k):
        return cls(d, M=M, cost=cost, learner=learner, forgetting=forgetting, k=k, **fixed)
    return build


ALGORITHMS = {
    'bag': Algorithm(
        'bag', lambda data, M, cost, k, rng, learner: bagging_train(data, M, rng, learner),
        _online(OnlineBagging), None),
    'boost': Algorithm(
        'boost', lambda data, M, cost, k, rng, learner: adaboost_train(data, M, rng, learner),
        _online(OnlineBoosting), None),
    'uob': Algorithm(
        'uob', lambda data, M, cost, k, rng, learner: underoverbagging_train(data, M, cost, rng, learner),
        _online(OnlineUnderOverBagging), GridKind.SAMPLING_RATE),
    'sbag': Algorithm(
        'sbag', lambda data, M, cost, k, rng, learner: smotebagging_train(data, M, cost, k, rng, learner),
        _online(OnlineSMOTEBagging), GridKind.SAMPLING_RATE),
    'adac2': Algorithm(
        'adac2', lambda data, M, cost, k, rng, learner: adac2_train(data, M, cost, rng, learner),
        _online(OnlineAdaC2), GridKind.COST_RATIO),
    'csb2': Algorithm(
        'csb2', lambda data, M, cost, k, rng, learner: csb2_train(data, M, cost, rng, learner),
        _online(OnlineCSB2), GridKind.COST_RATIO),
}

for _v in (1, 2, 3):
    ALGORITHMS[f'rus{_v}'] = Algorithm(
        f'rus{_v}',
        lambda data, M, cost, k, rng, learner, v=_v: rusboost_train(data, M, cost, v, rng, learner),
        _online(OnlineRUSBoost, variant=_v), GridKind.SAMPLING_RATE)
    ALGORITHMS[f'sbo{_v}'] = Algorithm(
        f'sbo{_v}',
        lambda data, M, cost, k, rng, learner, v=_v: smoteboost_train(data, M, cost, k, v, rng, learner),
        _online(OnlineSMOTEBoost, variant=_v), GridKind.SAMPLING_RATE)
del _v
