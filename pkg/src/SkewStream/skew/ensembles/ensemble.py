import math
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, List

import numpy as np

from ..core.errors import ArgumentError
from ..core.voting import VoteRule, vote_label, weighted_vote
from ..learners import BaseLearner, make_learner

# d -> fresh, untrained learner
LearnerFactory = Callable[[int], BaseLearner]


def learner_factory(kind="nb", beta: float = 1.0) -> LearnerFactory:
    return partial(make_learner, kind, beta=beta)


@dataclass
class BoostRound:
    eps: float
    wacc: float
    werr: float
    weight_sum: float
    violated: bool


@dataclass
class Ensemble:
    members: List[BaseLearner]
    weights: List[float]
    vote_rule: VoteRule = VoteRule.MAJORITY
    rounds: List[BoostRound] = field(default_factory=list)

    def __post_init__(self):
        if not self.members:
            raise ArgumentError("An ensemble needs at least one member")
        if len(self.weights) != len(self.members):
            raise ArgumentError("One weight per member is required")
        if not all(math.isfinite(w) for w in self.weights):
            raise ArgumentError("Member weights must be finite")

    def __len__(self) -> int:
        return len(self.members)

    @property
    def violations(self) -> int:
        return sum(1 for r in self.rounds if r.violated)

    def votes(self, X: np.ndarray) -> np.ndarray:
        X = np.atleast_2d(X)
        return np.vstack([h.predict_many(X) for h in self.members])

    def score_many(self, X: np.ndarray) -> np.ndarray:
        return weighted_vote(self.votes(X), self.weights)

    def predict_many(self, X: np.ndarray) -> np.ndarray:
        return vote_label(self.score_many(X))

    def score(self, x: np.ndarray) -> float:
        return float(self.score_many(np.asarray(x)[None, :])[0])

    def predict(self, x: np.ndarray) -> int:
        return int(self.predict_many(np.asarray(x)[None, :])[0])


def ensemble_score(ens, features: np.ndarray) -> float:
    return ens.score(features)


def ensemble_predict(ens, features: np.ndarray) -> int:
    return ens.predict(features)
