import threading
from abc import ABC, abstractmethod
from typing import List

import numpy as np

from ..core.costs import CostSpec, UNIT_COST
from ..core.errors import ArgumentError
from ..core.rng import RngStream
from ..core.types import ClassCounts, LabeledInstance, POSITIVE, class_counts_update
from ..core.voting import VoteRule, vote_label, weighted_vote
from ..drift.forgetting import ForgettingConfig, apply_forgetting
from ..ensembles.smote import DEFAULT_K
from ..learners import make_learner
from .online_smote import PositiveBuffer, online_smote
from .state import BoostLearnerState


class OnlineEnsemble(ABC):
    """
    Fixed-size ensemble updated one instance at a time.

    Class counts and the positive buffer advance once per instance before
    the members are visited. Draws for member m come from rng.child(m); the
    children are cached by (seed, stream_id), so passing an equal stream on
    a later call, even a freshly built one, continues the member draws
    instead of replaying them. A stream with a different id starts over.
    """

    vote_rule = VoteRule.MAJORITY
    uses_buffer = False

    def __init__(self, d: int, M: int = 10, cost: CostSpec = UNIT_COST, learner="nb",
                 forgetting: ForgettingConfig = None, k: int = DEFAULT_K):
        if M < 1:
            raise ArgumentError(f"Ensemble size must be >= 1, got {M}")
        self.d = d
        self.M = M
        self.cost = cost
        self.forgetting = forgetting or ForgettingConfig()
        self.lock = threading.RLock()
        self.members = [make_learner(learner, d, beta=self.forgetting.beta) for _ in range(M)]
        self.states: List[BoostLearnerState] = [BoostLearnerState() for _ in range(M)]
        self.counts = ClassCounts()
        self.buffer = PositiveBuffer(d, k) if self.uses_buffer else None
        self._rng_key = None
        self._member_rngs: List[RngStream] = []

    def update(self, instance: LabeledInstance, rng: RngStream) -> "OnlineEnsemble":
        with self.lock:
            if instance.d != self.d:
                raise ArgumentError(f"Expected {self.d} features, got {instance.d}")
            self.counts = class_counts_update(self.counts, instance.label)
            if self.buffer is not None and instance.label == POSITIVE:
                self.buffer.append(instance.features)
            self._update(instance.features, instance.label, self._streams(rng))
        return self

    @abstractmethod
    def _update(self, x: np.ndarray, y: int, streams: List[RngStream]) -> None:
        raise NotImplementedError

    def _streams(self, rng: RngStream) -> List[RngStream]:
        key = (rng.seed, rng.stream_id)
        if key != self._rng_key:
            self._rng_key = key
            self._member_rngs = [rng.child(m) for m in range(1, self.M + 1)]
        return self._member_rngs

    @property
    def both_classes_seen(self) -> bool:
        return self.counts.n_pos > 0 and self.counts.n_neg > 0

    def _present(self, m: int, x: np.ndarray, y: int, k: int) -> None:
        for _ in range(k):
            self.members[m].update(x, y)

    def _present_synthetic(self, m: int, k: int, rng: RngStream) -> None:
        for _ in range(k):
            self.members[m].update(online_smote(self.buffer, rng), POSITIVE)

    def _decay(self, m: int) -> BoostLearnerState:
        return apply_forgetting(self.states[m], self.forgetting)

    def member_weights(self) -> List[float]:
        return [1.0] * self.M

    def violations(self) -> int:
        return 0

    def score_many(self, X: np.ndarray) -> np.ndarray:
        X = np.atleast_2d(X)
        with self.lock:
            votes = np.vstack([h.predict_many(X) for h in self.members])
            return weighted_vote(votes, self.member_weights())

    def predict_many(self, X: np.ndarray) -> np.ndarray:
        return vote_label(self.score_many(X))

    def score(self, x: np.ndarray) -> float:
        return float(self.score_many(np.asarray(x)[None, :])[0])

    def predict(self, x: np.ndarray) -> int:
        return int(self.predict_many(np.asarray(x)[None, :])[0])

    def __repr__(self) -> str:
        return f"{type(self).__name__}(M={self.M}, d={self.d}, counts={self.counts}, beta={self.forgetting.beta})"
