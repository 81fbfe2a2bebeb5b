import numpy as np

from ..core.errors import ArgumentError
from ..ensembles.smote import DEFAULT_K


class PositiveBuffer:
    """Append-only store of the positive feature vectors seen so far, in arrival order."""

    def __init__(self, d: int, k: int = DEFAULT_K):
        if k < 1:
            raise ArgumentError(f"k must be >= 1, got {k}")
        self.d = d
        self.k = k
        self._data = np.empty((16, d))
        self._size = 0
        self._neighbors = None

    def append(self, x: np.ndarray) -> None:
        if self._size == self._data.shape[0]:
            grown = np.empty((2 * self._data.shape[0], self.d))
            grown[:self._size] = self._data[:self._size]
            self._data = grown
        self._data[self._size] = x
        self._size += 1
        self._neighbors = None

    def __len__(self) -> int:
        return self._size

    @property
    def points(self) -> np.ndarray:
        return self._data[:self._size]

    @property
    def newest(self) -> np.ndarray:
        if self._size == 0:
            raise ArgumentError("Positive buffer is empty")
        return self._data[self._size - 1]

    def neighbors(self) -> np.ndarray:
        """Indices of the min(k, n-1) nearest earlier points to the newest one."""
        if self._neighbors is None:
            earlier = self._data[:self._size - 1]
            dist = np.linalg.norm(earlier - self.newest, axis=1)
            self._neighbors = np.argsort(dist, kind='stable')[:min(self.k, earlier.shape[0])]
        return self._neighbors


def online_smote(buffer: PositiveBuffer, rng) -> np.ndarray:
    x = buffer.newest
    if len(buffer) == 1:
        return x.copy()
    nb = buffer.neighbors()
    other = buffer.points[nb[int(rng.integers(nb.shape[0]))]]
    gap = rng.random()
    return x + gap * (other - x)
