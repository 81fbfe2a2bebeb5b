import numpy as np
import pytest

from SkewStream.skew.core import CostSpec, RngStream
from SkewStream.skew.drift import Concept, DriftKind, DriftStreamSpec, ForgettingConfig, concept_label, generate
from SkewStream.skew.eval import prequential_run
from SkewStream.skew.online import OnlineAdaC2


@pytest.mark.parametrize("kind", list(DriftKind))
def test_default_streams_hold_the_class_ratio(kind):
    data = generate(DriftStreamSpec(kind, seed=1))
    assert len(data) == 4000
    assert data.counts.class_ratio == pytest.approx(90.0, rel=0.05)


def test_sine1g_old_concept_share_decays_through_the_window():
    data = generate(DriftStreamSpec(DriftKind.SINE1G, class_ratio=2.0, seed=2))
    old = concept_label(data.X[:, 0], data.X[:, 1], Concept.OLD) == data.y
    assert old[:1000].all()
    assert not old[3000:].any()
    early, late = old[1000:1500].mean(), old[2500:3000].mean()
    assert early > 0.7 and late < 0.3


def _online_auc(learner, beta, seed):
    spec = DriftStreamSpec(DriftKind.SINE1, seed=seed)
    data = generate(spec, RngStream(seed, "drift"))
    ens = OnlineAdaC2(2, M=10, cost=CostSpec(c_pos=1.0, c_neg=0.1), learner=learner,
                      forgetting=ForgettingConfig(beta))
    return prequential_run(data, ens, rng=RngStream(seed, 0, 0).child("online")).auc


@pytest.mark.slow
def test_forgetting_recovers_from_abrupt_drift():
    seeds = range(10)
    ns_lda = np.mean([_online_auc("lda", 0.9, s) for s in seeds])
    plain_lda = np.mean([_online_auc("lda", 1.0, s) for s in seeds])
    ns_nb = np.mean([_online_auc("nb", 0.9, s) for s in seeds])
    plain_nb = np.mean([_online_auc("nb", 1.0, s) for s in seeds])
    assert ns_lda == pytest.approx(0.8885, abs=0.05)
    assert ns_lda - plain_lda >= 0.05
    assert ns_nb - plain_nb >= 0.10
