from typing import Callable, Iterable, NamedTuple

import numpy as np

from ..core.errors import ArgumentError
from ..core.types import LabeledInstance
from .roc import auc_from_scores


class PrequentialResult(NamedTuple):
    auc: float
    scores: np.ndarray
    labels: np.ndarray

    @property
    def predictions(self) -> np.ndarray:
        return (self.scores > 0.5).astype(np.int8)


def prequential_run(stream: Iterable[LabeledInstance], ens, update_fn: Callable = None,
                    rng=None) -> PrequentialResult:
    """
    Test-then-train pass: every instance is scored before it is learned.

    `update_fn(ens, instance)` defaults to ens.update(instance, rng).
    """
    if update_fn is None:
        if rng is None:
            raise ArgumentError("Either update_fn or rng is required")
        update_fn = lambda e, inst: e.update(inst, rng)
    scores, labels = [], []
    for instance in stream:
        scores.append(ens.score(instance.features))
        labels.append(instance.label)
        update_fn(ens, instance)
    scores = np.asarray(scores, dtype=np.float64)
    labels = np.asarray(labels, dtype=np.int8)
    return PrequentialResult(auc_from_scores(scores, labels), scores, labels)
