"""
Boosting-based ensembles trained by resampling from the weight vector D_m.

All weight updates are normalization-free: the class-partition sums of the
current D appear in the update factors so that sum(D) is conserved. When a
partition is empty (every example right, or every example wrong) D is left
as it is. Vote weights use values clamped to [1e-10, 1 - 1e-10].

RUSBoost and SMOTEBoost change only the training set of each member; the
error and the update are always computed on the original examples with the
AdaBoost rule. Their auxiliary randomness lives on the "thin" and "smote"
substreams, so at C = 1 they replay AdaBoost draw for draw.
"""

import logging
from typing import Callable, Tuple

import numpy as np

from ..core.costs import CostSpec, round_half_up
from ..core.errors import ArgumentError
from ..core.rng import RngStream
from ..core.types import Dataset, NEGATIVE, POSITIVE
from ..core.voting import VoteRule, log_ratio_weight
from .ensemble import BoostRound, Ensemble, LearnerFactory, learner_factory
from .sampling import train_member, weighted_draw
from .smote import DEFAULT_K, neighbor_table, synthesize

logger = logging.getLogger(__name__)

VARIANTS = (1, 2, 3)

# (D, correct) -> (new D, member weight, round record)
UpdateRule = Callable[[np.ndarray, np.ndarray], Tuple[np.ndarray, float, BoostRound]]
# (D, m) -> (X, y) training set of member m
TrainingSet = Callable[[np.ndarray, int], Tuple[np.ndarray, np.ndarray]]


def _cost_vector(y: np.ndarray, cost: CostSpec) -> np.ndarray:
    return np.where(y == POSITIVE, cost.c_pos, cost.c_neg)


def adac2_update(D: np.ndarray, correct: np.ndarray, costs: np.ndarray):
    """Member weight is 0.5 * log(wacc / werr)."""
    weighted = costs * D
    wacc = float(np.sum(weighted[correct]))
    werr = float(np.sum(weighted[~correct]))
    eps = float(np.sum(D[~correct]))
    if wacc > 0 and werr > 0:
        D = D * np.where(correct, costs / (2.0 * wacc), costs / (2.0 * werr))
    alpha = 0.5 * log_ratio_weight(wacc, werr)
    return D, alpha, BoostRound(eps, wacc, werr, float(np.sum(D)), violated=wacc <= werr)


def adaboost_update(D: np.ndarray, correct: np.ndarray):
    """
    AdaC2 at unit cost with the member weight on the full log((1-eps)/eps)
    scale, twice the AdaC2 and CSB2 half-log weights. D is identical, and so
    are ensemble scores, since the weighted vote divides by the total weight.
    """
    D, alpha, rnd = adac2_update(D, correct, np.ones_like(D))
    rnd.violated = rnd.eps >= 0.5
    return D, 2.0 * alpha, rnd


def csb2_update(D: np.ndarray, correct: np.ndarray, costs: np.ndarray):
    eps = float(np.sum(D[~correct]))
    acc = float(np.sum(D[correct]))
    werr = float(np.sum((costs * D)[~correct]))
    if eps > 0 and acc > 0:
        spread = eps + werr
        D = D * np.where(correct, (eps / spread) / acc, costs / spread)
    alpha = 0.5 * log_ratio_weight(acc, eps)
    violated = eps >= 1.0 or eps * eps / (1.0 - eps) >= werr
    return D, alpha, BoostRound(eps, acc, werr, float(np.sum(D)), violated=violated)


def _validate(data: Dataset, M: int):
    if len(data) == 0:
        raise ArgumentError("Cannot train on an empty dataset")
    if M < 1:
        raise ArgumentError(f"Ensemble size must be >= 1, got {M}")


def _validate_variant(variant: int):
    if variant not in VARIANTS:
        raise ArgumentError(f"Variant must be one of {VARIANTS}, got {variant!r}")


def boost(data: Dataset, M: int, training_set: TrainingSet, update: UpdateRule,
          vote_rule: VoteRule, learner: LearnerFactory = None, trace: list = None) -> Ensemble:
    """
    Sequential boosting loop shared by every trainer in this module.

    `trace`, when given, receives a copy of D after each update.
    """
    _validate(data, M)
    learner = learner or learner_factory()
    D = np.full(len(data), 1.0 / len(data))
    members, weights, rounds = [], [], []
    for m in range(1, M + 1):
        X, y = training_set(D, m)
        member = train_member(learner, data.d, X, y)
        correct = member.predict_many(data.X) == data.y
        D, alpha, rnd = update(D, correct)
        logger.debug("member %d: eps=%.6f wacc=%.6f werr=%.6f alpha=%.6f",
                     m, rnd.eps, rnd.wacc, rnd.werr, alpha)
        if trace is not None:
            trace.append(D.copy())
        members.append(member)
        weights.append(alpha)
        rounds.append(rnd)

    ens = Ensemble(members, weights, vote_rule, rounds)
    if ens.violations:
        logger.debug("%d of %d members violated the boosting requirement", ens.violations, M)
    return ens


def _resampled(data: Dataset, rng: RngStream) -> TrainingSet:
    def training_set(D, m):
        idx = weighted_draw(D, len(data), rng.child(m, "draw"))
        return data.X[idx], data.y[idx]
    return training_set


def adaboost_train(data: Dataset, M: int, rng: RngStream,
                   learner: LearnerFactory = None, trace: list = None) -> Ensemble:
    return boost(data, M, _resampled(data, rng), adaboost_update,
                 VoteRule.LOG_ODDS, learner, trace)


def adac2_train(data: Dataset, M: int, cost: CostSpec, rng: RngStream,
                learner: LearnerFactory = None, trace: list = None) -> Ensemble:
    costs = _cost_vector(data.y, cost)
    return boost(data, M, _resampled(data, rng), lambda D, c: adac2_update(D, c, costs),
                 VoteRule.LOG_WACC_WERR, learner, trace)


def csb2_train(data: Dataset, M: int, cost: CostSpec, rng: RngStream,
               learner: LearnerFactory = None, trace: list = None) -> Ensemble:
    costs = _cost_vector(data.y, cost)
    return boost(data, M, _resampled(data, rng), lambda D, c: csb2_update(D, c, costs),
                 VoteRule.LOG_ODDS, learner, trace)


def _class_draw(D: np.ndarray, pool: np.ndarray, size: int, rng: RngStream) -> np.ndarray:
    if size <= 0 or pool.shape[0] == 0:
        return np.empty(0, dtype=np.intp)
    return pool[weighted_draw(D[pool], size, rng)]


def rus_indices(data: Dataset, D: np.ndarray, cost: CostSpec, variant: int,
                rng: RngStream) -> np.ndarray:
    """
    Indices into `data` forming the undersampled training set of one member.

    `rng` is the member's substream; draws from D use rng.child("draw").
    """
    _validate_variant(variant)
    pos_idx = np.flatnonzero(data.y == POSITIVE)
    neg_idx = np.flatnonzero(data.y == NEGATIVE)
    C = cost.c_rate
    draw = rng.child("draw")

    if variant == 1:
        keep = round_half_up(C * pos_idx.shape[0])
        if keep < neg_idx.shape[0]:
            neg_idx = np.sort(rng.child("thin").gen.choice(neg_idx, size=keep, replace=False))
        subset = np.concatenate([pos_idx, neg_idx])
        return subset[weighted_draw(D[subset], subset.shape[0], draw)]

    if variant == 2:
        negs = _class_draw(D, neg_idx, round_half_up(C * pos_idx.shape[0]), draw)
        poss = _class_draw(D, pos_idx, pos_idx.shape[0], draw)
        return np.concatenate([negs, poss])

    idx = weighted_draw(D, len(data), draw)
    if C == 1:
        return idx
    is_neg = data.y[idx] == NEGATIVE
    drawn_neg = np.flatnonzero(is_neg)
    keep = round_half_up(drawn_neg.shape[0] / C, floor=0)
    kept = rng.child("thin").gen.choice(drawn_neg, size=keep, replace=False)
    mask = ~is_neg
    mask[kept] = True
    return idx[mask]


def rusboost_train(data: Dataset, M: int, cost: CostSpec, variant: int, rng: RngStream,
                   learner: LearnerFactory = None, trace: list = None) -> Ensemble:
    _validate_variant(variant)
    if data.counts.n_pos == 0:
        raise ArgumentError("RUSBoost needs at least one positive")

    def training_set(D, m):
        idx = rus_indices(data, D, cost, variant, rng.child(m))
        return data.X[idx], data.y[idx]

    return boost(data, M, training_set, adaboost_update, VoteRule.LOG_ODDS, learner, trace)


def smoteboost_synthetic_count(counts, cost: CostSpec) -> int:
    """Synthetics added by variants 1 and 2: N-/C - N+, zero when already at target."""
    return round_half_up(counts.n_neg / cost.c_rate - counts.n_pos, floor=0)


def smoteboost1_distribution(D: np.ndarray, n_synthetic: int) -> np.ndarray:
    """D extended by n_synthetic entries of 1/N' and renormalized."""
    n_total = D.shape[0] + n_synthetic
    extended = np.concatenate([D, np.full(n_synthetic, 1.0 / n_total)])
    return extended / extended.sum()


def smote_training_set(data: Dataset, D: np.ndarray, cost: CostSpec, variant: int,
                       rng: RngStream, table: np.ndarray = None):
    """
    (X, y, n_synthetic) training set of one SMOTEBoost member.

    Synthetic base points come from the positives drawn for this member
    (variants 2 and 3) or from all positives (variant 1); neighbours always
    come from the full positive set.
    """
    _validate_variant(variant)
    pos_idx = np.flatnonzero(data.y == POSITIVE)
    neg_idx = np.flatnonzero(data.y == NEGATIVE)
    positives = data.X[pos_idx]
    if table is None:
        table = neighbor_table(positives, DEFAULT_K)
    can_smote = pos_idx.shape[0] >= 2
    draw = rng.child("draw")

    if variant == 1:
        s = smoteboost_synthetic_count(data.counts, cost) if can_smote else 0
        smote_rng = rng.child("smote")
        synth = synthesize(positives, smote_rng.integers(pos_idx.shape[0], size=s), table, smote_rng) \
            if s else np.empty((0, data.d))
        X = np.vstack([data.X, synth])
        y = np.concatenate([data.y, np.full(s, POSITIVE, dtype=np.int8)])
        idx = weighted_draw(smoteboost1_distribution(D, s), X.shape[0], draw)
        return X[idx], y[idx], s

    if variant == 2:
        negs = _class_draw(D, neg_idx, neg_idx.shape[0], draw)
        poss = _class_draw(D, pos_idx, pos_idx.shape[0], draw)
        idx = np.concatenate([negs, poss])
        s = smoteboost_synthetic_count(data.counts, cost) if can_smote else 0
        if s:
            smote_rng = rng.child("smote")
            local = np.searchsorted(pos_idx, poss)
            bases = local[smote_rng.integers(local.shape[0], size=s)]
            synth = synthesize(positives, bases, table, smote_rng)
        else:
            synth = np.empty((0, data.d))
    else:
        idx = weighted_draw(D, len(data), draw)
        local = np.searchsorted(pos_idx, idx[data.y[idx] == POSITIVE])
        s = round_half_up((cost.c_rate - 1.0) * local.shape[0], floor=0) if can_smote else 0
        if s and local.shape[0]:
            synth = synthesize(positives, local[np.arange(s) % local.shape[0]], table, rng.child("smote"))
        else:
            s, synth = 0, np.empty((0, data.d))

    X = np.vstack([data.X[idx], synth])
    y = np.concatenate([data.y[idx], np.full(synth.shape[0], POSITIVE, dtype=np.int8)])
    return X, y, s


def smoteboost_train(data: Dataset, M: int, cost: CostSpec, k: int = DEFAULT_K, variant: int = 1,
                     rng: RngStream = None, learner: LearnerFactory = None,
                     trace: list = None) -> Ensemble:
    _validate_variant(variant)
    if data.counts.n_pos == 0:
        raise ArgumentError("SMOTEBoost needs at least one positive")
    if rng is None:
        raise ArgumentError("SMOTEBoost needs a random stream")
    if data.counts.n_pos < 2:
        logger.warning("SMOTEBoost with a single positive generates no synthetics")
    table = neighbor_table(data.X[data.y == POSITIVE], k) if data.counts.n_pos >= 2 else None

    def training_set(D, m):
        X, y, _ = smote_training_set(data, D, cost, variant, rng.child(m), table)
        return X, y

    return boost(data, M, training_set, adaboost_update, VoteRule.LOG_ODDS, learner, trace)


__all__ = [
    "adaboost_update", "adac2_update", "csb2_update", "boost",
    "adaboost_train", "adac2_train", "csb2_train", "rusboost_train", "smoteboost_train",
    "rus_indices", "smote_training_set", "smoteboost_synthetic_count", "smoteboost1_distribution",
    "VARIANTS",
]
