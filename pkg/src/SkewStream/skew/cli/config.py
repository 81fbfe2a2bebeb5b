"""
Experiment configuration.

Config files are flat `key = value` lines (comments start with '#' or ';',
lists are comma separated). Defaults follow the standard protocol: ten
members, k = 5 neighbours, five folds, a ten-point cost sweep.
"""

import configparser
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import List, Optional, Union

from ..core.costs import CostSpec
from ..core.errors import ArgumentError, ConfigError
from ..drift.generators import DEFAULT_LENGTH, DEFAULT_RATIO, DEFAULT_TRANSITION, DriftKind, DriftStreamSpec
from ..learners.gaussian_learners import LearnerKind
from .algorithms import ALGORITHMS

SECTION = "experiment"
MODES = ("batch", "online", "ns-online")
FORMATS = ("csv", "jsonl")
NS_PREFIX = "ns-"
DEFAULT_NS_BETA = 0.9


@dataclass
class ExperimentConfig:
    dataset: Optional[str] = None
    drift_kind: Optional[str] = None
    drift_length: int = DEFAULT_LENGTH
    drift_ratio: float = DEFAULT_RATIO
    drift_transition: int = DEFAULT_TRANSITION
    algorithm: str = "uob"
    modes: Optional[List[str]] = None
    learner: str = "nb"
    M: int = 10
    k_smote: int = 5
    grid_points: int = 10
    c_pos: Optional[float] = None
    c_neg: Optional[float] = None
    c_rate: Optional[float] = None
    folds: int = 5
    seeds: List[int] = field(default_factory=lambda: [0])
    beta: Optional[float] = None
    label_column: Union[int, str] = -1
    positive_label: str = "positive"
    delimiter: str = ","
    train_fraction: Optional[float] = None
    workers: int = 1
    output: str = "results"
    format: str = "csv"
    timing: bool = False

    def __post_init__(self):
        algorithm = str(self.algorithm).strip().lower()
        ns = algorithm.startswith(NS_PREFIX)
        if ns:
            algorithm = algorithm[len(NS_PREFIX):]
        self.algorithm = algorithm
        if self.modes is None:
            if ns:
                self.modes = ["ns-online"]
            elif self.drift_kind is not None:
                self.modes = ["online"]
            else:
                self.modes = ["batch", "online"]
        elif ns:
            self.modes = ["ns-online" if m == "online" else m for m in self.modes]
        if self.beta is None:
            self.beta = DEFAULT_NS_BETA if "ns-online" in self.modes else 1.0
        self._validate()

    def _validate(self):
        if (self.dataset is None) == (self.drift_kind is None):
            raise ConfigError("Exactly one of 'dataset' and 'drift_kind' must be given")
        if self.algorithm not in ALGORITHMS:
            raise ConfigError(f"Unknown algorithm {self.algorithm!r}; choose from {sorted(ALGORITHMS)}")
        bad = [m for m in self.modes if m not in MODES]
        if bad or not self.modes:
            raise ConfigError(f"Modes must be drawn from {MODES}, got {self.modes}")
        if self.drift_kind is not None and "batch" in self.modes:
            raise ConfigError("Drift streams are evaluated prequentially; 'batch' mode is not available")
        try:
            LearnerKind(self.learner)
            if self.drift_kind is not None:
                DriftKind(self.drift_kind)
        except ValueError as e:
            raise ConfigError(str(e)) from None
        if self.M < 1:
            raise ConfigError(f"M must be >= 1, got {self.M}")
        if self.k_smote < 1:
            raise ConfigError(f"k_smote must be >= 1, got {self.k_smote}")
        if self.grid_points < 2:
            raise ConfigError(f"grid_points must be >= 2, got {self.grid_points}")
        if self.folds < 2:
            raise ConfigError(f"folds must be >= 2, got {self.folds}")
        if not self.seeds:
            raise ConfigError("At least one seed is required")
        if not 0.0 <= self.beta <= 1.0:
            raise ConfigError(f"beta must lie in [0, 1], got {self.beta}")
        if self.train_fraction is not None and not 0.0 < self.train_fraction < 1.0:
            raise ConfigError(f"train_fraction must lie in (0, 1), got {self.train_fraction}")
        if self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")
        if self.format not in FORMATS:
            raise ConfigError(f"format must be one of {FORMATS}, got {self.format!r}")
        # both raise ConfigError on bad values
        _ = self.explicit_cost
        _ = self.drift_spec

    @property
    def explicit_cost(self) -> Optional[CostSpec]:
        """The single cost point given by c_pos/c_neg/c_rate, if any key was set."""
        if self.c_pos is None and self.c_neg is None and self.c_rate is None:
            return None
        try:
            return CostSpec(
                c_pos=1.0 if self.c_pos is None else self.c_pos,
                c_neg=1.0 if self.c_neg is None else self.c_neg,
                c_rate=1.0 if self.c_rate is None else self.c_rate,
            )
        except ArgumentError as e:
            raise ConfigError(str(e)) from None

    @property
    def drift_spec(self) -> Optional[DriftStreamSpec]:
        if self.drift_kind is None:
            return None
        return drift_spec_for(self, seed=self.seeds[0])


def drift_spec_for(cfg: ExperimentConfig, seed: int) -> DriftStreamSpec:
    try:
        return DriftStreamSpec(DriftKind(cfg.drift_kind), cfg.drift_length, cfg.drift_ratio,
                               cfg.drift_transition, seed)
    except (ArgumentError, ValueError) as e:
        raise ConfigError(str(e)) from None


def _read_flat(path: Union[str, Path]) -> dict:
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"Config file {path} does not exist")
    parser = configparser.ConfigParser(inline_comment_prefixes=('#', ';'), interpolation=None)
    parser.optionxform = str
    try:
        parser.read_string(f"[{SECTION}]\n" + path.read_text())
    except configparser.Error as e:
        raise ConfigError(f"{path}: {e}") from None
    return dict(parser[SECTION])


def _split(value: str) -> List[str]:
    return [v.strip() for v in value.split(',') if v.strip()]


def _bool(value: str) -> bool:
    lowered = value.strip().lower()
    if lowered in ('1', 'true', 'yes', 'on'):
        return True
    if lowered in ('0', 'false', 'no', 'off'):
        return False
    raise ValueError(f"not a boolean: {value!r}")


def _label_column(value: str) -> Union[int, str]:
    return int(value) if value.lstrip('-').isdigit() else value


CONVERTERS = {
    'drift_length': int, 'drift_ratio': float, 'drift_transition': int,
    'M': int, 'k_smote': int, 'grid_points': int,
    'c_pos': float, 'c_neg': float, 'c_rate': float,
    'folds': int, 'seeds': lambda v: [int(s) for s in _split(v)],
    'modes': _split, 'beta': float, 'label_column': _label_column,
    'train_fraction': float, 'workers': int, 'timing': _bool,
}

FIELDS = {f.name.lower(): f.name for f in fields(ExperimentConfig)}


def config_from_mapping(raw: dict) -> ExperimentConfig:
    kwargs = {}
    for key, value in raw.items():
        name = FIELDS.get(key.strip().lower())
        if name is None:
            raise ConfigError(f"Unknown config key {key!r}")
        try:
            kwargs[name] = CONVERTERS.get(name, str)(value.strip()) if isinstance(value, str) else value
        except ValueError as e:
            raise ConfigError(f"Bad value for {name}: {e}") from None
    return ExperimentConfig(**kwargs)


def load_config(path: Union[str, Path]) -> ExperimentConfig:
    return config_from_mapping(_read_flat(path))


DRIFT_KEYS = {'kind': 'kind', 'length': 'length', 'ratio': 'class_ratio',
              'class_ratio': 'class_ratio', 'transition': 'transition', 'seed': 'seed'}
DRIFT_CONVERTERS = {'kind': lambda v: DriftKind(v.strip().lower()), 'length': int,
                    'class_ratio': float, 'transition': int, 'seed': int}


def load_drift_spec(path: Union[str, Path]) -> DriftStreamSpec:
    kwargs = {}
    for key, value in _read_flat(path).items():
        name = DRIFT_KEYS.get(key.strip().lower())
        if name is None:
            raise ConfigError(f"Unknown drift spec key {key!r}")
        try:
            kwargs[name] = DRIFT_CONVERTERS[name](value)
        except ValueError as e:
            raise ConfigError(f"Bad value for {name}: {e}") from None
    try:
        return DriftStreamSpec(**kwargs)
    except ArgumentError as e:
        raise ConfigError(str(e)) from None
