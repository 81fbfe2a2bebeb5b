import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from ..core.costs import CostSpec, UNIT_COST, cost_grid
from ..core.errors import UndefinedAUCError
from ..core.rng import RngStream
from ..core.types import Dataset, LabeledInstance
from ..core.voting import vote_label
from ..drift.forgetting import ForgettingConfig
from ..drift.generators import generate
from ..ensembles import learner_factory
from ..eval import auc_from_scores, operating_point, prequential_run, stratified_kfold, stratified_split
from .algorithms import ALGORITHMS, Algorithm
from .config import ExperimentConfig, drift_spec_for
from .dataset import parse_dataset

logger = logging.getLogger(__name__)

COLUMNS = [
    "algorithm", "mode", "learner", "dataset", "seed", "fold", "cost_point_index",
    "c_pos", "c_neg", "c_rate", "fpr", "tpr", "auc", "violations", "wall_ms",
]
MODE_ORDER = {"batch": 0, "online": 1, "ns-online": 2}


@dataclass
class ResultRecord:
    algorithm: str
    mode: str
    learner: str
    dataset: str
    seed: int
    fold: int
    cost_point_index: int
    c_pos: float
    c_neg: float
    c_rate: float
    fpr: float
    tpr: float
    auc: Optional[float]
    violations: int
    wall_ms: float

    def to_dict(self) -> dict:
        return {c: getattr(self, c) for c in COLUMNS}

    @property
    def key(self):
        return (self.dataset, self.seed, self.fold, self.cost_point_index, MODE_ORDER[self.mode])


@dataclass
class Cell:
    data: Dataset
    seed: int
    fold: int
    cost_index: int
    cost: CostSpec
    mode: str
    train: Optional[np.ndarray] = None
    test: Optional[np.ndarray] = None


def cost_points(cfg: ExperimentConfig, alg: Algorithm, data: Dataset) -> List[CostSpec]:
    explicit = cfg.explicit_cost
    if explicit is not None:
        return [explicit]
    if alg.grid is None:
        return [UNIT_COST]
    ratio = data.counts.class_ratio if data.counts.n_pos else 1.0
    return cost_grid(alg.grid, max(1.0, ratio), cfg.grid_points)


def _instances(data: Dataset, order: np.ndarray):
    for i in order:
        yield LabeledInstance(data.X[i], int(data.y[i]))


def _violations(ens) -> int:
    v = ens.violations
    return v() if callable(v) else v


def _run_cell(cfg: ExperimentConfig, alg: Algorithm, cell: Cell) -> ResultRecord:
    data = cell.data
    rng = RngStream(cell.seed, cell.fold, cell.cost_index)
    start = time.perf_counter()

    if cell.mode == "batch":
        ens = alg.batch(data.subset(cell.train), cfg.M, cell.cost, cfg.k_smote, rng,
                        learner_factory(cfg.learner))
        scores = ens.score_many(data.X[cell.test])
        labels = data.y[cell.test]
    elif cell.mode == "online":
        ens = alg.online(data.d, cfg.M, cell.cost, cfg.learner, None, cfg.k_smote)
        if cell.test is None:
            result = prequential_run(_instances(data, np.arange(len(data))), ens, rng=rng.child("online"))
            scores, labels = result.scores, result.labels
        else:
            order = cell.train[RngStream(cell.seed, cell.fold, "order").permutation(cell.train.shape[0])]
            stream_rng = rng.child("online")
            for instance in _instances(data, order):
                ens.update(instance, stream_rng)
            scores = ens.score_many(data.X[cell.test])
            labels = data.y[cell.test]
    else:
        ens = alg.online(data.d, cfg.M, cell.cost, cfg.learner, ForgettingConfig(cfg.beta), cfg.k_smote)
        if cell.train is None:
            order = np.arange(len(data))
        else:
            order = RngStream(cell.seed, "order").permutation(len(data))
        result = prequential_run(_instances(data, order), ens, rng=rng.child("online"))
        scores, labels = result.scores, result.labels

    wall_ms = (time.perf_counter() - start) * 1000.0 if cfg.timing else 0.0
    fpr, tpr = operating_point(labels, vote_label(scores))
    try:
        auc = auc_from_scores(scores, labels)
    except UndefinedAUCError as e:
        logger.warning("seed %d fold %d: %s", cell.seed, cell.fold, e)
        auc = None
    return ResultRecord(
        algorithm=alg.id, mode=cell.mode, learner=cfg.learner, dataset=data.name,
        seed=cell.seed, fold=cell.fold, cost_point_index=cell.cost_index,
        c_pos=cell.cost.c_pos, c_neg=cell.cost.c_neg, c_rate=cell.cost.c_rate,
        fpr=fpr, tpr=tpr, auc=auc, violations=_violations(ens), wall_ms=wall_ms,
    )


def _static_cells(cfg: ExperimentConfig, alg: Algorithm, data: Dataset) -> List[Cell]:
    costs = cost_points(cfg, alg, data)
    cv_modes = [m for m in cfg.modes if m != "ns-online"]
    cells = []
    for seed in cfg.seeds:
        if cv_modes:
            if cfg.train_fraction is not None:
                splits = [stratified_split(data, cfg.train_fraction, RngStream(seed, "split"))]
            else:
                splits = list(stratified_kfold(data, cfg.folds, RngStream(seed, "folds")))
            for fold, (train, test) in enumerate(splits):
                for idx, cost in enumerate(costs):
                    cells.extend(Cell(data, seed, fold, idx, cost, mode, train, test) for mode in cv_modes)
        if "ns-online" in cfg.modes:
            # prequential over the whole dataset in a seeded order
            full = np.arange(len(data))
            cells.extend(Cell(data, seed, 0, idx, cost, "ns-online", full) for idx, cost in enumerate(costs))
    return cells


def _drift_cells(cfg: ExperimentConfig, alg: Algorithm) -> List[Cell]:
    cells = []
    for seed in cfg.seeds:
        stream = generate(drift_spec_for(cfg, seed), RngStream(seed, "drift"))
        for idx, cost in enumerate(cost_points(cfg, alg, stream)):
            cells.extend(Cell(stream, seed, 0, idx, cost, mode) for mode in cfg.modes)
    return cells


def run_experiment(cfg: ExperimentConfig, data: Dataset = None) -> List[ResultRecord]:
    """
    Run every (seed, fold, cost point, mode) cell of `cfg`.

    Static datasets are cross validated (batch and online); ns-online runs
    and drift streams are evaluated prequentially. Records come back sorted
    by cell, independent of how the worker pool scheduled them.
    """
    alg = ALGORITHMS[cfg.algorithm]
    if cfg.drift_kind is not None:
        cells = _drift_cells(cfg, alg)
    else:
        if data is None:
            data = parse_dataset(cfg.dataset, cfg.label_column, cfg.positive_label, cfg.delimiter)
        cells = _static_cells(cfg, alg, data)
    logger.info("Running %s with %s learners: %d cells on %d worker(s)",
                alg.id, cfg.learner, len(cells), cfg.workers)

    if cfg.workers == 1:
        records = [_run_cell(cfg, alg, cell) for cell in cells]
    else:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            records = list(pool.map(lambda cell: _run_cell(cfg, alg, cell), cells))
    records.sort(key=lambda r: r.key)

    violated = sum(r.violations for r in records)
    if violated:
        logger.info("%d member(s) violated the boosting requirement across %d cells", violated, len(records))
    return records
