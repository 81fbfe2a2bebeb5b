import numpy as np

from ..core.errors import ArgumentError
from ..core.rng import RngStream


def resample_rate_schedule(M: int) -> np.ndarray:
    """a_m = m / M for m = 1..M; a_M is exactly 1."""
    if M < 1:
        raise ArgumentError(f"Ensemble size must be >= 1, got {M}")
    return np.arange(1, M + 1) / M


def with_replacement(pool: np.ndarray, size: int, rng: RngStream) -> np.ndarray:
    if size <= 0 or pool.shape[0] == 0:
        return np.empty(0, dtype=np.intp)
    return pool[rng.integers(pool.shape[0], size=size)]


def weighted_draw(weights: np.ndarray, size: int, rng: RngStream) -> np.ndarray:
    """Indices drawn with replacement proportionally to `weights` (inverse cdf)."""
    if size <= 0:
        return np.empty(0, dtype=np.intp)
    cdf = np.cumsum(weights)
    u = rng.uniforms(size) * cdf[-1]
    idx = np.searchsorted(cdf, u, side='right')
    return np.minimum(idx, weights.shape[0] - 1)


def train_member(factory, d: int, X: np.ndarray, y: np.ndarray):
    member = factory(d)
    if X.shape[0]:
        member.partial_fit(X, y)
    return member
