"""
Synthetic drift streams over the unit square.

The old concept labels a point positive when it lies below y = sin(x); the
new concept is its complement. Class counts are fixed up front (the positive
positions are chosen at random) and every position is rejection sampled from
its concept until the drawn point carries the required label.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
import pandas as pd

from ..core.costs import round_half_up
from ..core.errors import ArgumentError, GenerationError
from ..core.rng import RngStream
from ..core.types import Dataset, NEGATIVE, POSITIVE

logger = logging.getLogger(__name__)

DEFAULT_LENGTH = 4000
DEFAULT_RATIO = 90.0
DEFAULT_TRANSITION = 2000

# n-/n+ of the old concept on uniform data
NATURAL_RATIO = math.cos(1.0) / (1.0 - math.cos(1.0))


class DriftKind(Enum):
    SINE1 = "sine1"
    SINE1G = "sine1g"
    SINE1M = "sine1m"


class Concept(Enum):
    OLD = "old"
    NEW = "new"


@dataclass(frozen=True)
class DriftStreamSpec:
    kind: DriftKind = DriftKind.SINE1
    length: int = DEFAULT_LENGTH
    class_ratio: float = DEFAULT_RATIO
    transition: int = DEFAULT_TRANSITION
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, 'kind', DriftKind(self.kind))
        if self.length <= 0:
            raise ArgumentError(f"Stream length must be positive, got {self.length}")
        if self.class_ratio < 1:
            raise ArgumentError(f"Class ratio must be >= 1, got {self.class_ratio}")
        if not 1 <= self.transition <= self.length:
            raise ArgumentError(f"Transition must lie in [1, {self.length}], got {self.transition}")


def concept_label(x, y, concept):
    """Label(s) of points (x, y) under `concept`; works on scalars and arrays."""
    below = np.asarray(y) < np.sin(np.asarray(x))
    if Concept(concept) is Concept.NEW:
        below = ~below
    return below.astype(np.int8)


def old_concept_probability(spec: DriftStreamSpec, i: int) -> float:
    """P(instance i, counted from 0, is drawn from the old concept)."""
    half = spec.length / 2.0
    if spec.kind is DriftKind.SINE1:
        return 1.0 if i < half else 0.0
    if spec.kind is DriftKind.SINE1G:
        start = half - spec.transition / 2.0
        if i < start:
            return 1.0
        if i >= start + spec.transition:
            return 0.0
        return 1.0 - (i - start) / spec.transition
    local = i if i < half else i - half
    return max(0.0, 1.0 - local / half)


def _generate(spec: DriftStreamSpec, rng: RngStream) -> Dataset:
    if spec.class_ratio < NATURAL_RATIO:
        raise GenerationError(
            f"Class ratio {spec.class_ratio} is below the natural ratio {NATURAL_RATIO:.4f} of the concept")
    N = spec.length
    n_pos = round_half_up(N / (1.0 + spec.class_ratio), floor=0)
    if n_pos < 1:
        raise GenerationError(f"Length {N} leaves no positives at class ratio {spec.class_ratio}")

    labels = np.full(N, NEGATIVE, dtype=np.int8)
    labels[rng.child("labels").permutation(N)[:n_pos]] = POSITIVE
    p_old = np.array([old_concept_probability(spec, i) for i in range(N)])
    old = rng.child("concept").uniforms(N) < p_old

    X = np.empty((N, 2))
    points = rng.child("points")
    pending = np.arange(N)
    rounds = 0
    while pending.shape[0]:
        candidates = points.uniforms((pending.shape[0], 2))
        below = candidates[:, 1] < np.sin(candidates[:, 0])
        drawn = np.where(old[pending], below, ~below).astype(np.int8)
        ok = drawn == labels[pending]
        X[pending[ok]] = candidates[ok]
        pending = pending[~ok]
        rounds += 1
    logger.debug("%s: %d positives of %d after %d rejection rounds", spec.kind.value, n_pos, N, rounds)
    return Dataset(X, labels, name=spec.kind.value)


def _stream(spec: DriftStreamSpec, rng: RngStream, kind: DriftKind) -> Dataset:
    if spec.kind is not kind:
        raise ArgumentError(f"Expected a {kind.value} spec, got {spec.kind.value}")
    return _generate(spec, rng or RngStream(spec.seed, "drift"))


def gen_sine1(spec: DriftStreamSpec, rng: RngStream = None) -> Dataset:
    return _stream(spec, rng, DriftKind.SINE1)


def gen_sine1g(spec: DriftStreamSpec, rng: RngStream = None) -> Dataset:
    return _stream(spec, rng, DriftKind.SINE1G)


def gen_sine1m(spec: DriftStreamSpec, rng: RngStream = None) -> Dataset:
    return _stream(spec, rng, DriftKind.SINE1M)


GENERATORS = {
    DriftKind.SINE1: gen_sine1,
    DriftKind.SINE1G: gen_sine1g,
    DriftKind.SINE1M: gen_sine1m,
}


def generate(spec: DriftStreamSpec, rng: RngStream = None) -> Dataset:
    return GENERATORS[spec.kind](spec, rng)


def stream_to_csv(data: Dataset, path) -> None:
    columns = ["x", "y"] if data.d == 2 else [f"x{j + 1}" for j in range(data.d)]
    frame = pd.DataFrame(data.X, columns=columns)
    frame["label"] = np.where(data.y == POSITIVE, "positive", "negative")
    frame.to_csv(path, index=False)
