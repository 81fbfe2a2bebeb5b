import math
from enum import Enum
from typing import Dict, Tuple

import numpy as np
from scipy.linalg import LinAlgError, cho_factor, cho_solve
from scipy.special import expit

from ..core.errors import ArgumentError
from ..core.types import NEGATIVE, POSITIVE
from .gaussian_stats import GaussianClassStats, regularize
from .learner_interface import BaseLearner

DEFAULT_RIDGE = 1e-6
LOG_2PI = math.log(2.0 * math.pi)


class LearnerKind(Enum):
    NB = "nb"
    LDA = "lda"
    QDA = "qda"


def _factor(sigma: np.ndarray, ridge: float):
    try:
        return cho_factor(sigma, lower=True, check_finite=False)
    except LinAlgError:
        # round-off in Pi - mu mu^T can leave a tiny negative eigenvalue
        w, V = np.linalg.eigh(sigma)
        floor = ridge * max(float(np.mean(np.abs(w))), 1.0)
        sigma = (V * np.maximum(w, floor)) @ V.T
        return cho_factor(0.5 * (sigma + sigma.T), lower=True, check_finite=False)


def _mahalanobis(diff: np.ndarray, cho) -> np.ndarray:
    sol = cho_solve(cho, diff.T, check_finite=False)
    return np.einsum('ij,ji->i', diff, sol)


def _log_det(cho) -> float:
    return 2.0 * float(np.sum(np.log(np.diag(cho[0]))))


class GaussianLearner(BaseLearner):
    """
    Incremental Gaussian discriminant over two classes.

    Training is by presentation only: a weight of k is realised by calling
    update k times. Subclasses turn the per-class moments into class
    conditional log-likelihoods.
    """

    kind: LearnerKind = None

    def __init__(self, d: int, beta: float = 1.0, ridge: float = DEFAULT_RIDGE):
        if d < 1:
            raise ArgumentError(f"Dimensionality must be positive, got {d}")
        self.d = d
        self.beta = beta
        self.ridge = ridge
        self.stats: Dict[int, GaussianClassStats] = {
            NEGATIVE: GaussianClassStats(d, beta),
            POSITIVE: GaussianClassStats(d, beta),
        }
        self._params = None

    def _validate_features(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=np.float64)
        if X.shape[-1] != self.d:
            raise ArgumentError(f"Expected {self.d} features, got {X.shape[-1]}")
        return X

    def update(self, x: np.ndarray, y: int) -> None:
        x = self._validate_features(x)
        self.stats[POSITIVE if y == POSITIVE else NEGATIVE].update(x)
        self._params = None

    def partial_fit(self, X: np.ndarray, y: np.ndarray) -> None:
        X = self._validate_features(np.atleast_2d(X))
        for row, label in zip(X, np.asarray(y)):
            self.stats[POSITIVE if label == POSITIVE else NEGATIVE].update(row)
        self._params = None

    @property
    def priors(self) -> Tuple[float, float]:
        t_neg, t_pos = self.stats[NEGATIVE].t, self.stats[POSITIVE].t
        total = t_neg + t_pos
        if total == 0:
            return 0.5, 0.5
        return t_neg / total, t_pos / total

    def _fit_params(self):
        raise NotImplementedError

    def _log_likelihoods(self, X: np.ndarray, params) -> Tuple[np.ndarray, np.ndarray]:
        raise NotImplementedError

    def score_many(self, X: np.ndarray) -> np.ndarray:
        X = self._validate_features(np.atleast_2d(X))
        pos_seen = self.stats[POSITIVE].seen
        neg_seen = self.stats[NEGATIVE].seen
        # negative until both classes have been seen
        if not (pos_seen and neg_seen):
            return np.zeros(X.shape[0])

        if self._params is None:
            self._params = self._fit_params()
        ll_neg, ll_pos = self._log_likelihoods(X, self._params)
        log_odds = (ll_pos - ll_neg) + (math.log(self.stats[POSITIVE].t) - math.log(self.stats[NEGATIVE].t))
        return expit(log_odds)

    def __repr__(self) -> str:
        return (f"{type(self).__name__}(d={self.d}, beta={self.beta}, "
                f"t_neg={self.stats[NEGATIVE].t:.3g}, t_pos={self.stats[POSITIVE].t:.3g})")


class NaiveBayes(GaussianLearner):
    kind = LearnerKind.NB

    def _fit_params(self):
        params = {}
        for label, st in self.stats.items():
            var = np.diag(regularize(st.covariance(), self.ridge)).copy()
            var = np.maximum(var, self.ridge)
            params[label] = (st.mu, var)
        return params

    def _log_likelihoods(self, X, params):
        out = []
        for label in (NEGATIVE, POSITIVE):
            mu, var = params[label]
            out.append(-0.5 * np.sum(LOG_2PI + np.log(var) + (X - mu) ** 2 / var, axis=1))
        return out[0], out[1]


class LDA(GaussianLearner):
    kind = LearnerKind.LDA

    def pooled_covariance(self) -> np.ndarray:
        neg, pos = self.stats[NEGATIVE], self.stats[POSITIVE]
        return (neg.t * neg.covariance() + pos.t * pos.covariance()) / (neg.t + pos.t)

    def _fit_params(self):
        cho = _factor(regularize(self.pooled_covariance(), self.ridge), self.ridge)
        return {label: st.mu for label, st in self.stats.items()}, cho

    def _log_likelihoods(self, X, params):
        means, cho = params
        # the shared log-determinant cancels in the log-odds
        ll_neg = -0.5 * _mahalanobis(X - means[NEGATIVE], cho)
        ll_pos = -0.5 * _mahalanobis(X - means[POSITIVE], cho)
        return ll_neg, ll_pos


class QDA(GaussianLearner):
    kind = LearnerKind.QDA

    def _fit_params(self):
        params = {}
        for label, st in self.stats.items():
            cho = _factor(regularize(st.covariance(), self.ridge), self.ridge)
            params[label] = (st.mu, cho, _log_det(cho))
        return params

    def _log_likelihoods(self, X, params):
        out = []
        for label in (NEGATIVE, POSITIVE):
            mu, cho, log_det = params[label]
            out.append(-0.5 * (_mahalanobis(X - mu, cho) + log_det))
        return out[0], out[1]


LEARNERS = {
    LearnerKind.NB: NaiveBayes,
    LearnerKind.LDA: LDA,
    LearnerKind.QDA: QDA,
}


def make_learner(kind, d: int, beta: float = 1.0, ridge: float = DEFAULT_RIDGE) -> GaussianLearner:
    return LEARNERS[LearnerKind(kind)](d, beta=beta, ridge=ridge)
