import numpy as np
import pytest

from SkewStream.skew.core import LabeledInstance, RngStream
from SkewStream.skew.eval import auc_from_scores, prequential_run


class RandomScorer:
    def __init__(self, seed):
        self.rng = np.random.default_rng(seed)

    def score(self, x):
        return float(self.rng.random())


def test_random_scorer_is_near_chance():
    rng = np.random.default_rng(11)
    labels = (rng.random(10000) < 0.1).astype(int)
    stream = (LabeledInstance(np.zeros(1), int(l)) for l in labels)
    result = prequential_run(stream, RandomScorer(12), update_fn=lambda e, inst: None)
    assert result.auc == pytest.approx(0.5, abs=0.03)
    assert len(result.scores) == 10000


def test_auc_on_large_inputs_matches_rank_formula():
    rng = RngStream(1, "auc")
    scores = rng.uniforms(200000)
    labels = (rng.uniforms(200000) < scores).astype(int)
    # P(label = 1 | s) = s gives AUC 5/6
    assert auc_from_scores(scores, labels) == pytest.approx(5 / 6, abs=0.005)
