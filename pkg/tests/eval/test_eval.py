import itertools

import numpy as np
import pandas as pd
import pytest

from SkewStream.skew.core import ArgumentError, Dataset, LabeledInstance, RngStream, UndefinedAUCError
from SkewStream.skew.eval import (
    ConsistencyReport, auc_from_scores, consistency_report, operating_point, prequential_run,
    roc_from_cost_sweep, stratified_kfold, stratified_split,
)


def brute_force_auc(scores, labels):
    pos = [s for s, l in zip(scores, labels) if l == 1]
    neg = [s for s, l in zip(scores, labels) if l == 0]
    total = 0.0
    for p, n in itertools.product(pos, neg):
        total += 1.0 if p > n else 0.5 if p == n else 0.0
    return total / (len(pos) * len(neg))


# score based AUC

def test_auc_examples():
    assert auc_from_scores([0.9, 0.1], [1, 0]) == 1.0
    assert auc_from_scores([0.3] * 6, [1, 0, 1, 0, 0, 0]) == 0.5
    assert auc_from_scores([0.8, 0.6, 0.4, 0.2], [1, 0, 1, 0]) == 0.75


def test_auc_errors():
    with pytest.raises(UndefinedAUCError):
        auc_from_scores([0.1, 0.2], [1, 1])
    with pytest.raises(ArgumentError):
        auc_from_scores([0.1, 0.2], [1, 0, 1])


def test_auc_matches_all_pairs_count():
    rng = np.random.default_rng(7)
    for _ in range(200):
        n = int(rng.integers(2, 201))
        labels = rng.integers(0, 2, n)
        labels[:2] = [0, 1]
        # coarse scores force plenty of ties
        scores = rng.integers(0, 10, n) / 10.0
        assert auc_from_scores(scores, labels) == brute_force_auc(scores, labels)


def test_operating_point():
    assert operating_point([1, 1, 0, 0], [1, 0, 1, 1]) == (1.0, 0.5)
    assert operating_point([0, 0], [0, 1]) == (0.5, 0.0)


# cost sweep ROC

def test_roc_examples():
    assert roc_from_cost_sweep([(0.0, 1.0)]).auc == pytest.approx(1.0)
    assert roc_from_cost_sweep([(0.5, 0.5)]).auc == pytest.approx(0.5)
    assert roc_from_cost_sweep([(0.2, 0.8), (0.4, 0.9)]).auc == pytest.approx(0.82)


def test_roc_keeps_dominated_points_and_anchors():
    curve = roc_from_cost_sweep([(0.4, 0.3), (0.2, 0.6)])
    assert curve.points[0] == (0.0, 0.0) and curve.points[-1] == (1.0, 1.0)
    assert len(curve.points) == 4
    assert curve.fpr.tolist() == [0.0, 0.2, 0.4, 1.0]


def test_roc_perfect_point_never_lowers_auc():
    rng = np.random.default_rng(1)
    for _ in range(50):
        pts = [tuple(p) for p in rng.random((int(rng.integers(1, 8)), 2))]
        before = roc_from_cost_sweep(pts).auc
        after = roc_from_cost_sweep(pts + [(0.0, 1.0)]).auc
        assert 0.0 <= before <= 1.0
        assert after >= before - 1e-12


def test_roc_validation():
    with pytest.raises(ArgumentError):
        roc_from_cost_sweep([])
    with pytest.raises(ArgumentError):
        roc_from_cost_sweep([(1.2, 0.5)])


# folds

def _labels(n_pos, n_neg):
    return Dataset(np.arange(n_pos + n_neg, dtype=float)[:, None], [1] * n_pos + [0] * n_neg)


def test_kfold_small_example():
    data = _labels(2, 8)
    plan = stratified_kfold(data, 5, RngStream(0, "folds"))
    assert [len(f) for f in plan.folds] == [2] * 5
    assert sum(1 for f in plan.folds if np.any(data.y[f] == 1)) == 2


def test_kfold_is_a_stratified_partition():
    data = _labels(37, 1447)
    plan = stratified_kfold(data, 5, RngStream(3, "folds"))
    union = np.sort(np.concatenate(plan.folds))
    assert np.array_equal(union, np.arange(len(data)))
    for fold in plan.folds:
        assert int(np.sum(data.y[fold])) in (7, 8)
    for train, test in plan:
        assert len(np.intersect1d(train, test)) == 0
        assert len(train) + len(test) == len(data)


def test_kfold_errors():
    with pytest.raises(ArgumentError):
        stratified_kfold(_labels(1, 2), 5, RngStream(0))
    with pytest.raises(ArgumentError):
        stratified_kfold(_labels(5, 5), 1, RngStream(0))


def test_stratified_split_keeps_test_instances():
    data = _labels(3, 40)
    train, test = stratified_split(data, 0.9, RngStream(2, "split"))
    assert np.sum(data.y[test]) >= 1
    assert len(train) + len(test) == len(data)
    with pytest.raises(ArgumentError):
        stratified_split(data, 1.0, RngStream(0))


# prequential

class Memorizer:
    def __init__(self):
        self.seen = set()

    def score(self, x):
        return 1.0 if tuple(x) in self.seen else 0.0

    def update(self, instance, rng):
        self.seen.add(tuple(instance.features))


class Oracle:
    def __init__(self, labels):
        self.labels = iter(labels)

    def score(self, x):
        return float(next(self.labels))

    def update(self, instance, rng):
        pass


def _instances(labels):
    return [LabeledInstance(np.array([float(i)]), int(l)) for i, l in enumerate(labels)]


def test_prequential_oracle_and_constant():
    labels = [0, 1, 0, 0, 1, 0]
    assert prequential_run(_instances(labels), Oracle(labels), rng=RngStream(0)).auc == 1.0
    constant = Memorizer()
    result = prequential_run(_instances(labels), constant, update_fn=lambda e, inst: None)
    assert result.auc == 0.5
    assert result.predictions.tolist() == [0] * 6


def test_prequential_scores_before_training():
    labels = [1, 0, 1, 0, 0]
    result = prequential_run(_instances(labels), Memorizer(), rng=RngStream(0))
    # each instance is new when scored
    assert result.scores.tolist() == [0.0] * 5


def test_prequential_single_class_stream():
    with pytest.raises(UndefinedAUCError):
        prequential_run(_instances([0, 0, 0]), Memorizer(), rng=RngStream(0))
    with pytest.raises(ArgumentError):
        prequential_run(_instances([0, 1]), Memorizer())


# consistency

def _results(pairs):
    rows = []
    for i, (b, o) in enumerate(pairs):
        rows.append(dict(dataset=f"d{i}", algorithm="uob", learner="nb", mode="batch", auc=b))
        rows.append(dict(dataset=f"d{i}", algorithm="uob", learner="nb", mode="online", auc=o))
    return rows


def test_consistency_examples():
    same = consistency_report(_results([(0.8, 0.8), (0.7, 0.7)]))
    assert same.pairs["abs_diff"].tolist() == [0.0, 0.0]
    single = consistency_report(_results([(0.90, 0.87)]))
    assert single.pairs["abs_diff"].iloc[0] == pytest.approx(0.03)
    agg = ConsistencyReport.from_records(_results([(0.90, 0.89), (0.80, 0.83)]))
    assert agg.aggregates["mean"].iloc[0] == pytest.approx(0.02)
    assert agg.mean_abs_diff == pytest.approx(0.02)


def test_consistency_rejects_unpaired_results():
    rows = _results([(0.9, 0.8)])[:1]
    with pytest.raises(ArgumentError):
        consistency_report(rows)
    with pytest.raises(ArgumentError):
        consistency_report(pd.DataFrame([{"mode": "batch", "auc": 0.5}]))
    dup = _results([(0.9, 0.8)]) + _results([(0.9, 0.8)])
    with pytest.raises(ArgumentError):
        consistency_report(dup)
