import math
from dataclasses import dataclass
from enum import Enum
from typing import List

import numpy as np

from .errors import ArgumentError


class GridKind(Enum):
    COST_RATIO = "cost-ratio"
    SAMPLING_RATE = "sampling-rate"


@dataclass(frozen=True)
class CostSpec:
    c_pos: float = 1.0
    c_neg: float = 1.0
    c_rate: float = 1.0

    def __post_init__(self):
        if not (self.c_neg > 0 and self.c_pos >= self.c_neg):
            raise ArgumentError(f"Costs need c_pos >= c_neg > 0, got ({self.c_pos}, {self.c_neg})")
        if not self.c_rate >= 1:
            raise ArgumentError(f"Sampling rate must be >= 1, got {self.c_rate}")

    def cost_of(self, label: int) -> float:
        return self.c_pos if label == 1 else self.c_neg


UNIT_COST = CostSpec()

# cost-ratio sweep keeps C_P at 1 and moves C_N from 0.1 to 1
MIN_C_NEG = 0.1


def cost_grid(kind, class_ratio: float, n_points: int = 10) -> List[CostSpec]:
    kind = GridKind(kind)
    if class_ratio < 1:
        raise ArgumentError(f"Class ratio must be >= 1, got {class_ratio}")
    if n_points < 2:
        raise ArgumentError(f"A cost grid needs at least 2 points, got {n_points}")

    if kind is GridKind.COST_RATIO:
        values = np.linspace(MIN_C_NEG, 1.0, n_points)
        values[0], values[-1] = MIN_C_NEG, 1.0
        return [CostSpec(c_pos=1.0, c_neg=round(float(v), 12)) for v in values]

    values = np.linspace(1.0, class_ratio, n_points)
    values[0], values[-1] = 1.0, class_ratio
    return [CostSpec(c_rate=float(v)) for v in values]


def round_half_up(x: float, floor: int = 1) -> int:
    return max(floor, int(math.floor(x + 0.5)))
