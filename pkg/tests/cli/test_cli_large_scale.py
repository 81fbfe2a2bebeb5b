import numpy as np
import pytest

from SkewStream.skew.cli import ExperimentConfig, run_experiment
from SkewStream.skew.cli.report import auc_summary, records_frame
from SkewStream.skew.core import Dataset
from SkewStream.skew.eval import consistency_report


def gaussian_dataset(n=2000, ratio=10.0, seed=0):
    rng = np.random.default_rng(seed)
    n_pos = int(round(n / (1.0 + ratio)))
    y = np.array([1] * n_pos + [0] * (n - n_pos))
    X = rng.normal(size=(n, 2)) + 1.5 * y[:, None]
    order = rng.permutation(n)
    return Dataset(X[order], y[order], name="gauss2d")


def mean_gap(records):
    summary = auc_summary(records_frame(records))
    paired = summary[summary["mode"].isin(["batch", "online"])].rename(columns={"sweep_auc": "auc"})
    return consistency_report(paired).mean_abs_diff


def test_parallel_grid_finishes_on_small_data():
    data = gaussian_dataset(n=300, seed=1)
    cfg = ExperimentConfig(dataset="gauss2d", algorithm="uob", M=5, grid_points=4, folds=3,
                           seeds=[0, 1], workers=4)
    records = run_experiment(cfg, data)
    assert len(records) == 2 * 3 * 4 * 2
    assert all(r.auc is not None for r in records)


@pytest.mark.slow
@pytest.mark.parametrize("algorithm,bound", [("uob", 0.02), ("sbag", 0.03)])
def test_bagging_pairs_stay_consistent(algorithm, bound):
    data = gaussian_dataset()
    cfg = ExperimentConfig(dataset="gauss2d", algorithm=algorithm, M=10, folds=5,
                           seeds=[0, 1, 2, 3, 4], workers=4)
    assert mean_gap(run_experiment(cfg, data)) <= bound


@pytest.mark.slow
@pytest.mark.parametrize("algorithm", ["adac2", "csb2"])
def test_boosting_gap_shrinks_with_training_size(algorithm):
    data = gaussian_dataset()
    gaps = {}
    for fraction in (0.1, 0.5, 0.9):
        cfg = ExperimentConfig(dataset="gauss2d", algorithm=algorithm, M=10, train_fraction=fraction,
                               seeds=[0, 1, 2, 3, 4], workers=4)
        gaps[fraction] = mean_gap(run_experiment(cfg, data))
    assert gaps[0.9] <= gaps[0.1]
    assert gaps[0.9] <= 0.05
