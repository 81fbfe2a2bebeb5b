import logging

import numpy as np
from scipy.spatial.distance import cdist

from ..core.errors import ArgumentError
from ..core.rng import RngStream

logger = logging.getLogger(__name__)

DEFAULT_K = 5


def neighbor_table(P: np.ndarray, k: int = DEFAULT_K) -> np.ndarray:
    """
    Row i holds the indices of the min(k, n-1) nearest other points of P[i]
    under Euclidean distance; ties go to the lower index.
    """
    if k < 1:
        raise ArgumentError(f"k must be >= 1, got {k}")
    n = P.shape[0]
    k_eff = min(k, n - 1)
    if k_eff < 1:
        return np.empty((n, 0), dtype=np.intp)
    dist = cdist(P, P)
    np.fill_diagonal(dist, np.inf)
    return np.argsort(dist, axis=1, kind='stable')[:, :k_eff]


def synthesize(P: np.ndarray, bases: np.ndarray, table: np.ndarray,
               rng: RngStream) -> np.ndarray:
    """One synthetic point per entry of `bases`, interpolated toward a random neighbour."""
    bases = np.asarray(bases, dtype=np.intp)
    if bases.size == 0 or table.shape[1] == 0:
        return np.empty((0, P.shape[1]))
    picks = rng.integers(table.shape[1], size=bases.size)
    gaps = rng.uniforms(bases.size)[:, None]
    origin = P[bases]
    return origin + gaps * (P[table[bases, picks]] - origin)


def smote(positives: np.ndarray, T: int, k: int, rng: RngStream) -> np.ndarray:
    """T synthetic points per positive, in input order."""
    positives = np.atleast_2d(np.asarray(positives, dtype=np.float64))
    if T < 0:
        raise ArgumentError(f"T must be >= 0, got {T}")
    if positives.shape[0] < 2:
        logger.warning("SMOTE needs at least two positives, got %d", positives.shape[0])
        return np.empty((0, positives.shape[1]))
    bases = np.repeat(np.arange(positives.shape[0]), T)
    return synthesize(positives, bases, neighbor_table(positives, k), rng)


def smote_budget(positives: np.ndarray, count: int, table: np.ndarray,
                 rng: RngStream) -> np.ndarray:
    """`count` synthetic points, cycling base points in order."""
    n = positives.shape[0]
    if count <= 0 or n < 2:
        return np.empty((0, positives.shape[1]))
    return synthesize(positives, np.arange(count) % n, table, rng)
