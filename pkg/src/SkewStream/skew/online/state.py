from dataclasses import dataclass


@dataclass
class BoostLearnerState:
    """Running lambda sums of one boosted member; eps/wacc/werr are derived."""

    lambda_sc: float = 0.0
    lambda_sw: float = 0.0
    lambda_tp: float = 0.0
    lambda_tn: float = 0.0
    lambda_fp: float = 0.0
    lambda_fn: float = 0.0
    lambda_sum: float = 0.0
    lambda_pos: float = 0.0
    lambda_neg: float = 0.0

    @property
    def eps(self) -> float:
        seen = self.lambda_sc + self.lambda_sw
        return self.lambda_sw / seen if seen > 0 else 0.5

    @property
    def wacc(self) -> float:
        return (self.lambda_tp + self.lambda_tn) / self.lambda_sum if self.lambda_sum > 0 else 0.0

    @property
    def werr(self) -> float:
        return (self.lambda_fp + self.lambda_fn) / self.lambda_sum if self.lambda_sum > 0 else 0.0

    @property
    def trained(self) -> bool:
        return self.lambda_sc + self.lambda_sw > 0 or self.lambda_sum > 0
