import math

import numpy as np

from .errors import ArgumentError
from .rng import RngStream

# largest rate handled by a single sequential-search inversion
CHUNK = 30.0


def _validate_lambda(lam: float) -> float:
    lam = float(lam)
    if not math.isfinite(lam) or lam < 0:
        raise ArgumentError(f"Poisson rate must be finite and nonnegative, got {lam}")
    return lam


def _invert(lam: float, u: float) -> int:
    k = 0
    p = math.exp(-lam)
    cdf = p
    while u > cdf:
        k += 1
        p *= lam / k
        if p == 0.0:
            break
        cdf += p
    return k


def poisson_sample(lam: float, rng: RngStream) -> int:
    """Exact Poisson(lam) draw; one uniform per draw when lam <= 30, none when lam == 0."""
    lam = _validate_lambda(lam)
    if lam == 0.0:
        return 0
    if lam <= CHUNK:
        return _invert(lam, rng.random())
    # sum of independent Poissons is Poisson in the summed rate
    chunks = math.ceil(lam / CHUNK)
    part = lam / chunks
    return sum(_invert(part, rng.random()) for _ in range(chunks))


def _cdf_table(lam: float) -> np.ndarray:
    cdf = []
    k = 0
    p = math.exp(-lam)
    total = p
    cdf.append(total)
    while p > 0.0:
        k += 1
        p *= lam / k
        total += p
        cdf.append(total)
    return np.array(cdf)


def poisson_samples(lam: float, size: int, rng: RngStream) -> np.ndarray:
    """Vectorised form of poisson_sample, same inversion through a cdf table."""
    lam = _validate_lambda(lam)
    if lam == 0.0:
        return np.zeros(size, dtype=np.int64)
    chunks = 1 if lam <= CHUNK else math.ceil(lam / CHUNK)
    part = lam / chunks
    cdf = _cdf_table(part)
    out = np.zeros(size, dtype=np.int64)
    for _ in range(chunks):
        u = rng.uniforms(size)
        draws = np.searchsorted(cdf, u, side='left')
        out += np.minimum(draws, cdf.shape[0] - 1)
    return out
