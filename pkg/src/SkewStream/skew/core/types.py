from dataclasses import dataclass, field
from typing import Iterator, List, Sequence

import numpy as np

from .errors import ArgumentError

POSITIVE = 1
NEGATIVE = 0


@dataclass(frozen=True)
class LabeledInstance:
    features: np.ndarray
    label: int

    def __post_init__(self):
        features = np.asarray(self.features, dtype=np.float64)
        if features.ndim != 1:
            raise ArgumentError("Features must be a 1-d vector")
        if not np.all(np.isfinite(features)):
            raise ArgumentError("Features must be finite")
        if self.label not in (POSITIVE, NEGATIVE):
            raise ArgumentError(f"Label must be 0 or 1, got {self.label!r}")
        object.__setattr__(self, 'features', features)

    @property
    def d(self) -> int:
        return self.features.shape[0]


@dataclass
class ClassCounts:
    n_pos: int = 0
    n_neg: int = 0

    def __post_init__(self):
        if self.n_pos < 0 or self.n_neg < 0:
            raise ArgumentError("Class counts must be nonnegative")

    @property
    def total(self) -> int:
        return self.n_pos + self.n_neg

    @property
    def class_ratio(self) -> float:
        if self.n_pos == 0:
            raise ArgumentError("Class ratio undefined without positives")
        return self.n_neg / self.n_pos

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "ClassCounts":
        labels = np.asarray(labels)
        n_pos = int(np.count_nonzero(labels == POSITIVE))
        return cls(n_pos=n_pos, n_neg=int(labels.shape[0]) - n_pos)


def class_counts_update(counts: ClassCounts, label: int) -> ClassCounts:
    if label == POSITIVE:
        return ClassCounts(counts.n_pos + 1, counts.n_neg)
    return ClassCounts(counts.n_pos, counts.n_neg + 1)


@dataclass
class Dataset:
    """Binary dataset held as a feature matrix plus a {0,1} label vector."""

    X: np.ndarray
    y: np.ndarray
    name: str = "dataset"
    counts: ClassCounts = field(init=False)

    def __post_init__(self):
        self.X = np.ascontiguousarray(self.X, dtype=np.float64)
        self.y = np.asarray(self.y, dtype=np.int8)
        if self.X.ndim != 2:
            raise ArgumentError("Feature matrix must be 2-d")
        if self.X.shape[0] != self.y.shape[0]:
            raise ArgumentError("Feature and label lengths differ")
        if not np.all(np.isin(self.y, (NEGATIVE, POSITIVE))):
            raise ArgumentError("Labels must be 0 or 1")
        if not np.all(np.isfinite(self.X)):
            raise ArgumentError("Features must be finite")
        self.counts = ClassCounts.from_labels(self.y)

    @classmethod
    def from_instances(cls, instances: Sequence[LabeledInstance], name: str = "dataset") -> "Dataset":
        if not instances:
            raise ArgumentError("Cannot build a dataset from no instances")
        d = instances[0].d
        if any(inst.d != d for inst in instances):
            raise ArgumentError("Instances disagree on dimensionality")
        X = np.vstack([inst.features for inst in instances])
        y = np.array([inst.label for inst in instances], dtype=np.int8)
        return cls(X, y, name=name)

    def __len__(self) -> int:
        return self.X.shape[0]

    @property
    def d(self) -> int:
        return self.X.shape[1]

    @property
    def instances(self) -> List[LabeledInstance]:
        return list(self)

    def __iter__(self) -> Iterator[LabeledInstance]:
        for row, label in zip(self.X, self.y):
            yield LabeledInstance(row, int(label))

    def subset(self, indices: Sequence[int], name: str = None) -> "Dataset":
        indices = np.asarray(indices, dtype=np.intp)
        return Dataset(self.X[indices], self.y[indices], name=name or self.name)

    @property
    def positives(self) -> np.ndarray:
        return self.X[self.y == POSITIVE]

    @property
    def negatives(self) -> np.ndarray:
        return self.X[self.y == NEGATIVE]
