import logging
from dataclasses import dataclass
from typing import Iterator, List, Tuple

import numpy as np

from ..core.costs import round_half_up
from ..core.errors import ArgumentError
from ..core.rng import RngStream
from ..core.types import Dataset, NEGATIVE, POSITIVE

logger = logging.getLogger(__name__)


@dataclass
class FoldPlan:
    folds: List[np.ndarray]
    seed: int = 0

    @property
    def k(self) -> int:
        return len(self.folds)

    def __len__(self) -> int:
        return len(self.folds)

    def train_test(self, i: int) -> Tuple[np.ndarray, np.ndarray]:
        test = self.folds[i]
        train = np.sort(np.concatenate([f for j, f in enumerate(self.folds) if j != i]))
        return train, test

    def __iter__(self) -> Iterator[Tuple[np.ndarray, np.ndarray]]:
        for i in range(self.k):
            yield self.train_test(i)


def stratified_kfold(data: Dataset, k: int, rng: RngStream) -> FoldPlan:
    """Shuffle each class, then deal round robin; negatives continue where positives stopped."""
    if k < 2:
        raise ArgumentError(f"Need at least 2 folds, got {k}")
    if k > len(data):
        raise ArgumentError(f"Cannot split {len(data)} instances into {k} folds")
    pos_idx = np.flatnonzero(data.y == POSITIVE)
    neg_idx = np.flatnonzero(data.y == NEGATIVE)
    if pos_idx.shape[0] < k:
        logger.warning("Only %d positives for %d folds; some folds get none", pos_idx.shape[0], k)

    pos_idx = pos_idx[rng.child("pos").permutation(pos_idx.shape[0])]
    neg_idx = neg_idx[rng.child("neg").permutation(neg_idx.shape[0])]
    assignment = np.empty(len(data), dtype=np.intp)
    assignment[pos_idx] = np.arange(pos_idx.shape[0]) % k
    assignment[neg_idx] = (pos_idx.shape[0] + np.arange(neg_idx.shape[0])) % k
    return FoldPlan([np.flatnonzero(assignment == i) for i in range(k)], seed=rng.seed)


def _split_class(idx: np.ndarray, fraction: float, rng: RngStream):
    n = idx.shape[0]
    idx = idx[rng.permutation(n)]
    if n < 2:
        return idx, idx[:0]
    n_train = min(round_half_up(fraction * n), n - 1)
    return idx[:n_train], idx[n_train:]


def stratified_split(data: Dataset, train_fraction: float, rng: RngStream) -> Tuple[np.ndarray, np.ndarray]:
    """(train, test) indices keeping the class ratio; each class keeps at least one test instance."""
    if not 0.0 < train_fraction < 1.0:
        raise ArgumentError(f"Training fraction must lie in (0, 1), got {train_fraction}")
    pos_train, pos_test = _split_class(np.flatnonzero(data.y == POSITIVE), train_fraction, rng.child("pos"))
    neg_train, neg_test = _split_class(np.flatnonzero(data.y == NEGATIVE), train_fraction, rng.child("neg"))
    return np.sort(np.concatenate([pos_train, neg_train])), np.sort(np.concatenate([pos_test, neg_test]))
