from .forgetting import ForgettingConfig, apply_forgetting
from .generators import (
    Concept, DriftKind, DriftStreamSpec, NATURAL_RATIO,
    concept_label, old_concept_probability,
    gen_sine1, gen_sine1g, gen_sine1m, generate, stream_to_csv,
)

__all__ = [
    "ForgettingConfig", "apply_forgetting",
    "Concept", "DriftKind", "DriftStreamSpec", "NATURAL_RATIO",
    "concept_label", "old_concept_probability",
    "gen_sine1", "gen_sine1g", "gen_sine1m", "generate", "stream_to_csv",
]
