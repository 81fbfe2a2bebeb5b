from dataclasses import dataclass, field

import numpy as np

from ..core.errors import ArgumentError


@dataclass
class GaussianClassStats:
    """
    First/second moment accumulators of one class with forgetting factor beta.

        t_n  = beta * t_{n-1} + 1
        mu_n = (1 - 1/t_n) mu_{n-1} + (1/t_n) x_n
        Pi_n = (1 - 1/t_n) Pi_{n-1} + (1/t_n) x_n x_n^T
        Sigma_n = Pi_n - mu_n mu_n^T

    With beta == 1, t is the instance count and mu/Pi are the plain sample
    mean and second moment.
    """

    d: int
    beta: float = 1.0
    t: float = 0.0
    mu: np.ndarray = field(default=None)
    pi: np.ndarray = field(default=None)

    def __post_init__(self):
        if not 0.0 <= self.beta <= 1.0:
            raise ArgumentError(f"Forgetting factor must lie in [0, 1], got {self.beta}")
        if self.mu is None:
            self.mu = np.zeros(self.d)
        if self.pi is None:
            self.pi = np.zeros((self.d, self.d))

    def update(self, x: np.ndarray) -> None:
        self.t = self.beta * self.t + 1.0
        w = 1.0 / self.t
        self.mu = (1.0 - w) * self.mu + w * x
        self.pi = (1.0 - w) * self.pi + w * np.outer(x, x)

    @property
    def seen(self) -> bool:
        return self.t > 0

    def covariance(self) -> np.ndarray:
        sigma = self.pi - np.outer(self.mu, self.mu)
        return 0.5 * (sigma + sigma.T)


def regularize(sigma: np.ndarray, ridge: float) -> np.ndarray:
    """Sigma + ridge * (trace(Sigma)/d) * I, falling back to scale 1 for a zero trace."""
    d = sigma.shape[0]
    scale = float(np.trace(sigma)) / d
    if scale <= 0.0:
        scale = 1.0
    return sigma + ridge * scale * np.eye(d)
