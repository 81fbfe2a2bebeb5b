from dataclasses import dataclass, fields

from ..core.errors import ArgumentError


@dataclass(frozen=True)
class ForgettingConfig:
    beta: float = 1.0

    def __post_init__(self):
        if not 0.0 <= self.beta <= 1.0:
            raise ArgumentError(f"Forgetting factor must lie in [0, 1], got {self.beta}")

    @property
    def stationary(self) -> bool:
        return self.beta == 1.0


def apply_forgetting(state, cfg: ForgettingConfig):
    """Scale every lambda accumulator of `state` by beta, in place."""
    if cfg is None or cfg.stationary:
        return state
    for f in fields(state):
        setattr(state, f.name, cfg.beta * getattr(state, f.name))
    return state
