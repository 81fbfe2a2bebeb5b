from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple

import numpy as np
from scipy.integrate import trapezoid
from scipy.stats import rankdata

from ..core.errors import ArgumentError, UndefinedAUCError
from ..core.types import POSITIVE

Point = Tuple[float, float]


def auc_from_scores(scores: Sequence[float], labels: Sequence[int]) -> float:
    """
    P(random positive outscores random negative), ties counted one half.

    Computed from average ranks (Mann-Whitney U), which equals the all-pairs
    count exactly.
    """
    scores = np.asarray(scores, dtype=np.float64)
    labels = np.asarray(labels)
    if scores.shape != labels.shape:
        raise ArgumentError("Scores and labels differ in length")
    pos = labels == POSITIVE
    n_pos = int(np.count_nonzero(pos))
    n_neg = labels.shape[0] - n_pos
    if n_pos == 0 or n_neg == 0:
        raise UndefinedAUCError(f"AUC needs both classes, got {n_pos} positives and {n_neg} negatives")
    ranks = rankdata(scores)
    u = float(ranks[pos].sum()) - n_pos * (n_pos + 1) / 2.0
    return u / (n_pos * n_neg)


def operating_point(y_true: Sequence[int], y_pred: Sequence[int]) -> Point:
    """(FPR, TPR) of hard predictions; a rate with an empty denominator is 0."""
    y_true = np.asarray(y_true)
    y_pred = np.asarray(y_pred)
    pos = y_true == POSITIVE
    n_pos = int(np.count_nonzero(pos))
    n_neg = y_true.shape[0] - n_pos
    tpr = float(np.count_nonzero(y_pred[pos] == POSITIVE)) / n_pos if n_pos else 0.0
    fpr = float(np.count_nonzero(y_pred[~pos] == POSITIVE)) / n_neg if n_neg else 0.0
    return fpr, tpr


@dataclass
class RocCurve:
    points: List[Point] = field(default_factory=list)

    @property
    def fpr(self) -> np.ndarray:
        return np.array([p[0] for p in self.points])

    @property
    def tpr(self) -> np.ndarray:
        return np.array([p[1] for p in self.points])

    @property
    def auc(self) -> float:
        if len(self.points) < 2:
            return 0.0
        return float(trapezoid(self.tpr, self.fpr))


def _validate_point(point) -> Point:
    fpr, tpr = float(point[0]), float(point[1])
    if not (0.0 <= fpr <= 1.0 and 0.0 <= tpr <= 1.0):
        raise ArgumentError(f"Operating point {point} outside the unit square")
    return fpr, tpr


def roc_from_cost_sweep(points: Iterable[Point]) -> RocCurve:
    """Polyline through the sweep's operating points plus the (0,0) and (1,1) anchors."""
    points = [_validate_point(p) for p in points]
    if not points:
        raise ArgumentError("A cost sweep needs at least one operating point")
    return RocCurve(sorted(points + [(0.0, 0.0), (1.0, 1.0)]))
