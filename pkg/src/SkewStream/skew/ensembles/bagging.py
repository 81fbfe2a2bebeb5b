"""
Bagging-based ensembles: plain bagging, UnderOverBagging and SMOTEBagging.

Members train independently on their own replicas and vote by majority. The
replica of member m is drawn from the substreams rng.child(m, ...), so member
sequences do not depend on how many draws earlier members consumed.
"""

import logging

import numpy as np

from ..core.costs import CostSpec, round_half_up
from ..core.errors import ArgumentError
from ..core.rng import RngStream
from ..core.types import Dataset, NEGATIVE, POSITIVE
from ..core.voting import VoteRule
from .ensemble import Ensemble, LearnerFactory, learner_factory
from .sampling import resample_rate_schedule, train_member, with_replacement
from .smote import DEFAULT_K, neighbor_table, smote_budget

logger = logging.getLogger(__name__)


def _validate_data(data: Dataset, M: int):
    if len(data) == 0:
        raise ArgumentError("Cannot train on an empty dataset")
    if M < 1:
        raise ArgumentError(f"Ensemble size must be >= 1, got {M}")


def _majority(members) -> Ensemble:
    return Ensemble(members, [1.0] * len(members), VoteRule.MAJORITY)


def uob_replica_sizes(counts, cost: CostSpec, a: float):
    """(negatives, positives) drawn for a member with resample rate a."""
    n_neg = round_half_up(counts.n_neg * a) if counts.n_neg else 0
    n_pos = round_half_up(cost.c_rate * counts.n_pos * a)
    return n_neg, n_pos


def smotebagging_budget(counts, cost: CostSpec, a: float):
    """(resampled, synthetic) positives for a member with resample rate a."""
    total = round_half_up(cost.c_rate * counts.n_pos)
    resampled = round_half_up(total * a, floor=0)
    return resampled, total - resampled


def bagging_train(data: Dataset, M: int, rng: RngStream,
                  learner: LearnerFactory = None) -> Ensemble:
    _validate_data(data, M)
    learner = learner or learner_factory()
    N = len(data)
    members = []
    for m in range(1, M + 1):
        idx = rng.child(m, "draw").integers(N, size=N)
        members.append(train_member(learner, data.d, data.X[idx], data.y[idx]))
    return _majority(members)


def underoverbagging_train(data: Dataset, M: int, cost: CostSpec, rng: RngStream,
                           learner: LearnerFactory = None) -> Ensemble:
    _validate_data(data, M)
    if data.counts.n_pos == 0:
        raise ArgumentError("UnderOverBagging needs at least one positive")
    learner = learner or learner_factory()
    pos_idx = np.flatnonzero(data.y == POSITIVE)
    neg_idx = np.flatnonzero(data.y == NEGATIVE)

    members = []
    for m, a in enumerate(resample_rate_schedule(M), start=1):
        n_neg, n_pos = uob_replica_sizes(data.counts, cost, a)
        idx = np.concatenate([
            with_replacement(neg_idx, n_neg, rng.child(m, "neg")),
            with_replacement(pos_idx, n_pos, rng.child(m, "pos")),
        ])
        logger.debug("uob member %d: %d negatives, %d positives", m, n_neg, n_pos)
        members.append(train_member(learner, data.d, data.X[idx], data.y[idx]))
    return _majority(members)


def smotebagging_train(data: Dataset, M: int, cost: CostSpec, k: int = DEFAULT_K,
                       rng: RngStream = None, learner: LearnerFactory = None) -> Ensemble:
    _validate_data(data, M)
    if data.counts.n_pos == 0:
        raise ArgumentError("SMOTEBagging needs at least one positive")
    if rng is None:
        raise ArgumentError("SMOTEBagging needs a random stream")
    learner = learner or learner_factory()
    pos_idx = np.flatnonzero(data.y == POSITIVE)
    neg_idx = np.flatnonzero(data.y == NEGATIVE)
    positives = data.X[pos_idx]
    table = neighbor_table(positives, k)
    can_smote = pos_idx.shape[0] >= 2
    if not can_smote:
        logger.warning("SMOTEBagging with a single positive falls back to resampling")

    members = []
    for m, a in enumerate(resample_rate_schedule(M), start=1):
        resampled, synthetic = smotebagging_budget(data.counts, cost, a)
        if not can_smote:
            resampled, synthetic = resampled + synthetic, 0
        neg = with_replacement(neg_idx, len(neg_idx), rng.child(m, "neg"))
        pos = with_replacement(pos_idx, resampled, rng.child(m, "pos"))
        synth = smote_budget(positives, synthetic, table, rng.child(m, "smote"))
        X = np.vstack([data.X[neg], data.X[pos], synth])
        y = np.concatenate([data.y[neg], data.y[pos], np.full(synth.shape[0], POSITIVE, dtype=np.int8)])
        members.append(train_member(learner, data.d, X, y))
    return _majority(members)
