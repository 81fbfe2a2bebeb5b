import math
from enum import Enum
from typing import Sequence

import numpy as np

EPS_FLOOR = 1e-10


class VoteRule(Enum):
    MAJORITY = "majority"
    LOG_ODDS = "log((1-eps)/eps)"
    LOG_WACC_WERR = "log(wacc/werr)"


def clamp(value: float) -> float:
    return min(max(value, EPS_FLOOR), 1.0 - EPS_FLOOR)


def log_odds_weight(eps: float) -> float:
    eps = clamp(eps)
    return math.log((1.0 - eps) / eps)


def log_ratio_weight(wacc: float, werr: float) -> float:
    return math.log(clamp(wacc) / clamp(werr))


def weighted_vote(votes: np.ndarray, weights: Sequence[float]) -> np.ndarray:
    """
    Positive vote mass over total mass for each column of `votes`.

    votes has shape (M, n) with 0/1 member predictions. A member with a
    negative weight votes for the opposite class with |weight|, which keeps
    the argmax of the summed weights and bounds the score in [0, 1].
    """
    votes = np.atleast_2d(np.asarray(votes, dtype=np.float64))
    w = np.asarray(weights, dtype=np.float64).reshape(-1, 1)
    flipped = np.where(w < 0, 1.0 - votes, votes)
    w = np.abs(w)
    total = float(w.sum())
    if total == 0.0:
        return np.full(votes.shape[1], 0.5)
    return (w * flipped).sum(axis=0) / total


def vote_label(scores: np.ndarray) -> np.ndarray:
    # ties go to the negative class
    return (np.asarray(scores) > 0.5).astype(np.int8)
