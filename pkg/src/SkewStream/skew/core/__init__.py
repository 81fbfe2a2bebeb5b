from .errors import ArgumentError, ConfigError, DataError, GenerationError, UndefinedAUCError
from .types import POSITIVE, NEGATIVE, LabeledInstance, ClassCounts, Dataset, class_counts_update
from .rng import RngStream
from .poisson import poisson_sample, poisson_samples
from .costs import CostSpec, GridKind, UNIT_COST, cost_grid, round_half_up
from .voting import VoteRule, clamp, weighted_vote, vote_label

__all__ = [
    "ArgumentError", "ConfigError", "DataError", "GenerationError", "UndefinedAUCError",
    "POSITIVE", "NEGATIVE", "LabeledInstance", "ClassCounts", "Dataset", "class_counts_update",
    "RngStream", "poisson_sample", "poisson_samples",
    "CostSpec", "GridKind", "UNIT_COST", "cost_grid", "round_half_up",
    "VoteRule", "clamp", "weighted_vote", "vote_label",
]
