import math

import numpy as np
import pytest

from SkewStream.skew.core import ArgumentError, ClassCounts, CostSpec, LabeledInstance, RngStream
from SkewStream.skew.drift import ForgettingConfig
from SkewStream.skew.learners import make_learner
from SkewStream.skew.online import (
    BoostLearnerState, OnlineAdaC2, OnlineBagging, OnlineBoosting, OnlineCSB2, OnlineRUSBoost,
    OnlineSMOTEBagging, OnlineSMOTEBoost, OnlineUnderOverBagging, PositiveBuffer,
    online_rusboost_update, online_smote,
)


class FixedRng:
    def __init__(self, pick, gap):
        self.pick, self.gap = pick, gap

    def integers(self, high, size=None):
        return self.pick

    def random(self):
        return self.gap


@pytest.fixture
def recorded_rates(monkeypatch):
    """Replace the bagging Poisson draw by a recorder that always presents once."""
    rates = []

    def fake(lam, rng):
        rates.append(lam)
        return 1
    monkeypatch.setattr("SkewStream.skew.online.bagging.poisson_sample", fake)
    return rates


def inst(x, y):
    return LabeledInstance(np.atleast_1d(np.asarray(x, dtype=np.float64)), y)


# state and online SMOTE

def test_state_defaults():
    st = BoostLearnerState()
    assert st.eps == 0.5 and st.wacc == 0.0 and st.werr == 0.0
    assert not st.trained


def test_online_smote_interpolates_toward_neighbour():
    buf = PositiveBuffer(2)
    buf.append(np.array([0.0, 0.0]))
    buf.append(np.array([1.0, 1.0]))
    out = online_smote(buf, FixedRng(0, 0.25))
    assert out.tolist() == [0.75, 0.75]


def test_online_smote_singleton_returns_point():
    buf = PositiveBuffer(2)
    buf.append(np.array([3.0, -1.0]))
    out = online_smote(buf, FixedRng(0, 0.9))
    assert out.tolist() == [3.0, -1.0]
    out[0] = 99.0
    assert buf.newest[0] == 3.0


def test_online_smote_stays_on_segments():
    buf = PositiveBuffer(2, k=3)
    rng = np.random.default_rng(0)
    for p in rng.normal(size=(20, 2)):
        buf.append(p)
    stream = RngStream(1, "smote")
    x = buf.newest
    for _ in range(50):
        s = online_smote(buf, stream)
        others = buf.points[buf.neighbors()]
        assert np.all(s >= np.minimum(x, others).min(axis=0) - 1e-12)
        assert np.all(s <= np.maximum(x, others).max(axis=0) + 1e-12)


def test_buffer_neighbours_and_growth():
    buf = PositiveBuffer(1, k=2)
    for v in range(40):
        buf.append(np.array([float(v)]))
    assert len(buf) == 40
    assert buf.neighbors().tolist() == [38, 37]
    with pytest.raises(ArgumentError):
        PositiveBuffer(1).newest


# bagging family

def test_online_bagging_presents_once_per_draw(recorded_rates):
    ens = OnlineBagging(1, M=3)
    ens.update(inst(0.5, 1), RngStream(0))
    assert recorded_rates == [1.0, 1.0, 1.0]
    assert all(m.stats[1].t == 1 for m in ens.members)


def test_online_bagging_repeated_presentation(monkeypatch):
    monkeypatch.setattr("SkewStream.skew.online.bagging.poisson_sample", lambda lam, rng: 2)
    ens = OnlineBagging(2, M=1)
    x = np.array([0.3, -0.7])
    ens.update(inst(x, 1), RngStream(0))
    ref = make_learner("nb", 2)
    ref.update(x, 1)
    ref.update(x, 1)
    assert ens.members[0].stats[1].t == ref.stats[1].t == 2
    assert np.array_equal(ens.members[0].stats[1].mu, ref.stats[1].mu)


def test_online_uob_rates(recorded_rates):
    ens = OnlineUnderOverBagging(1, M=2, cost=CostSpec(c_rate=2.0))
    ens.update(inst(0.0, 1), RngStream(0))
    ens.update(inst(0.0, 0), RngStream(0))
    # members a = 0.5, 1.0
    assert recorded_rates == [1.0, 2.0, 0.5, 1.0]


def test_online_uob_unit_rate_last_member_is_bagging(recorded_rates):
    ens = OnlineUnderOverBagging(1, M=4, cost=CostSpec(c_rate=1.0))
    ens.update(inst(0.0, 1), RngStream(0))
    ens.update(inst(0.0, 0), RngStream(0))
    assert recorded_rates[3] == 1.0 and recorded_rates[7] == 1.0


def test_online_smotebagging_rates(recorded_rates):
    ens = OnlineSMOTEBagging(1, M=2, cost=CostSpec(c_rate=4.0))
    ens.update(inst(1.5, 1), RngStream(0))
    # (real, synthetic) per member: a = 0.5 -> (2, 2); a = 1 -> (4, 0)
    assert recorded_rates == [2.0, 2.0, 4.0, 0.0]
    # first-ever positive: the synthetic is the instance itself
    member = ens.members[0]
    assert member.stats[1].t == 2
    assert member.stats[1].mu[0] == pytest.approx(1.5)
    assert len(ens.buffer) == 1


def test_update_checks_dimension():
    with pytest.raises(ArgumentError):
        OnlineBagging(2, M=1).update(inst(0.0, 1), RngStream(0))
    with pytest.raises(ArgumentError):
        OnlineBagging(2, M=0)


# boosting steps

def test_boosting_first_step_correct_and_wrong():
    ens = OnlineBoosting(1, M=1)
    assert ens._step(0, 1, True, 1.0) == pytest.approx(0.5)
    assert ens.states[0].lambda_sc == 1.0

    ens = OnlineBoosting(1, M=1)
    assert ens._step(0, 1, False, 1.0) == pytest.approx(0.5)
    assert ens.states[0].lambda_sw == 1.0


def test_boosting_step_at_half_error_keeps_lambda():
    ens = OnlineBoosting(1, M=1)
    ens.states[0].lambda_sc, ens.states[0].lambda_sw = 0.7, 1.5
    assert ens._step(0, 1, True, 0.8) == pytest.approx(0.8)
    ens = OnlineBoosting(1, M=1)
    ens.states[0].lambda_sc, ens.states[0].lambda_sw = 1.5, 0.7
    assert ens._step(0, 1, False, 0.8) == pytest.approx(0.8)


def test_adac2_first_steps():
    ens = OnlineAdaC2(1, M=1, cost=CostSpec(c_pos=1.0, c_neg=1.0))
    assert ens._step(0, 1, True, 1.0) == pytest.approx(0.5)
    st = ens.states[0]
    assert st.lambda_sum == 1.0 and st.lambda_tp == 1.0 and st.wacc == 1.0

    ens = OnlineAdaC2(1, M=1, cost=CostSpec(c_pos=1.0, c_neg=0.5))
    assert ens._step(0, 0, False, 1.0) == pytest.approx(0.5)
    assert ens.states[0].lambda_fp == 0.5 and ens.states[0].werr == 0.5


def test_csb2_steps():
    ens = OnlineCSB2(1, M=1)
    assert ens._step(0, 1, False, 1.0) == pytest.approx(0.5)

    ens = OnlineCSB2(1, M=1, cost=CostSpec(c_pos=1.0, c_neg=0.5))
    st = ens.states[0]
    st.lambda_sc, st.lambda_sw, st.lambda_sum, st.lambda_fp = 2.0, 1.0, 3.0, 0.5
    # after the step: eps = 0.25, werr = 0.125
    assert ens._step(0, 1, True, 1.0) == pytest.approx(8 / 9)


def test_unit_cost_steps_match_boosting():
    plain, adac2, csb2 = OnlineBoosting(1, M=1), OnlineAdaC2(1, M=1), OnlineCSB2(1, M=1)
    lam = {id(e): 1.0 for e in (plain, adac2, csb2)}
    pattern = [True, True, False, True, False, False, True]
    for y, correct in zip([1, 0, 0, 1, 0, 1, 0], pattern):
        for e in (plain, adac2, csb2):
            lam[id(e)] = e._step(0, y, correct, lam[id(e)])
        assert lam[id(adac2)] == pytest.approx(lam[id(plain)], rel=1e-12)
        assert lam[id(csb2)] == pytest.approx(lam[id(plain)], rel=1e-12)


def test_rus_rates():
    ens = OnlineRUSBoost(1, M=1, cost=CostSpec(c_rate=4.0), variant=3)
    ens.counts = ClassCounts(1, 1)
    assert ens.rus_rate(0, 0, 1.0) == 0.25
    assert ens.rus_rate(0, 1, 1.0) == 1.0

    ens = OnlineRUSBoost(1, M=1, cost=CostSpec(c_rate=2.0), variant=2)
    ens.counts = ClassCounts(10, 90)
    ens.states[0].lambda_pos, ens.states[0].lambda_neg = 0.4, 0.6
    assert ens.rus_rate(0, 1, 1.0) == pytest.approx(0.25)

    ens = OnlineRUSBoost(1, M=1, cost=CostSpec(c_rate=1.0), variant=1)
    ens.counts = ClassCounts(20, 20)
    ens.states[0].lambda_pos, ens.states[0].lambda_neg = 3.0, 3.0
    assert ens.rus_rate(0, 1, 0.7) == pytest.approx(0.7)
    assert ens.rus_rate(0, 0, 0.7) == pytest.approx(0.7)


def test_rates_untouched_until_both_classes_seen():
    ens = OnlineRUSBoost(1, M=1, cost=CostSpec(c_rate=4.0), variant=3)
    ens.counts = ClassCounts(0, 5)
    assert ens.rus_rate(0, 0, 1.0) == 1.0
    sbo = OnlineSMOTEBoost(1, M=1, cost=CostSpec(c_rate=3.0), variant=3)
    sbo.counts = ClassCounts(4, 0)
    assert sbo.smote_rates(0, 1, 1.0) == (1.0, 0.0)


def test_smoteboost_rates():
    ens = OnlineSMOTEBoost(1, M=1, cost=CostSpec(c_rate=3.0), variant=1)
    ens.counts = ClassCounts(10, 90)
    assert ens.smote_rates(0, 1, 1.0) == (1.0, pytest.approx(2.0))
    for variant in (1, 2, 3):
        ens = OnlineSMOTEBoost(1, M=1, cost=CostSpec(c_rate=3.0), variant=variant)
        ens.counts = ClassCounts(10, 90)
        ens.states[0].lambda_pos, ens.states[0].lambda_neg = 0.5, 0.5
        assert ens.smote_rates(0, 0, 1.0)[1] == 0.0

    ens = OnlineSMOTEBoost(1, M=1, cost=CostSpec(c_rate=1.0), variant=3)
    ens.counts = ClassCounts(10, 90)
    assert ens.smote_rates(0, 1, 1.0) == (1.0, 0.0)


def test_smoteboost_negative_rates_are_floored():
    ens = OnlineSMOTEBoost(1, M=1, cost=CostSpec(c_rate=5.0), variant=1)
    ens.counts = ClassCounts(10, 20)
    assert ens.smote_rates(0, 1, 1.0)[1] == 0.0


def test_variant_checked():
    with pytest.raises(ArgumentError):
        OnlineRUSBoost(1, variant=0)
    ens = OnlineRUSBoost(1, M=1, variant=2)
    with pytest.raises(ArgumentError):
        online_rusboost_update(ens, inst(0.0, 1), 1, RngStream(0))


# forgetting

def test_forgetting_recurrence():
    ens = OnlineAdaC2(1, M=1, forgetting=ForgettingConfig(0.9))
    for _ in range(2):
        ens._decay(0)
        ens._step(0, 1, True, 1.0)
    assert ens.states[0].lambda_tp == pytest.approx(0.9 * 1.0 + 1.0)


def test_forgetting_beta_zero_keeps_current_only():
    ens = OnlineAdaC2(1, M=1, forgetting=ForgettingConfig(0.0))
    for lam in (1.0, 0.3, 0.7):
        ens._decay(0)
        ens._step(0, 0, False, lam)
        assert ens.states[0].lambda_sum == lam


def test_beta_one_matches_stationary_run():
    rng = np.random.default_rng(5)
    X = rng.normal(size=(150, 2))
    y = (X[:, 0] + 0.5 * rng.normal(size=150) > 1.0).astype(int)
    plain = OnlineAdaC2(2, M=4, cost=CostSpec(c_neg=0.5))
    ns = OnlineAdaC2(2, M=4, cost=CostSpec(c_neg=0.5), forgetting=ForgettingConfig(1.0))
    a, b = RngStream(3), RngStream(3)
    for xi, yi in zip(X, y):
        plain.update(inst(xi, int(yi)), a)
        ns.update(inst(xi, int(yi)), b)
    assert plain.states == ns.states


def test_forgetting_config_validation():
    with pytest.raises(ArgumentError):
        ForgettingConfig(1.2)
    assert ForgettingConfig().stationary


# votes

def test_untrained_members_carry_no_weight():
    ens = OnlineBoosting(1, M=3)
    assert ens.member_weights() == [0.0, 0.0, 0.0]
    assert ens.score(np.array([0.0])) == 0.5
    assert ens.predict(np.array([0.0])) == 0
    assert ens.violations() == 0


def test_counts_advance_once_per_instance():
    ens = OnlineSMOTEBoost(1, M=5, cost=CostSpec(c_rate=2.0), variant=1)
    rng = RngStream(0)
    for x, y in [(0.0, 0), (1.0, 1), (0.2, 0), (1.3, 1)]:
        ens.update(inst(x, y), rng)
    assert ens.counts == ClassCounts(2, 2)
    assert len(ens.buffer) == 2


def test_equal_streams_continue_member_draws():
    rng = np.random.default_rng(12)
    X = rng.normal(size=40)
    y = (rng.random(40) < 0.3).astype(int)
    y[:2] = [0, 1]
    reused = OnlineSMOTEBagging(1, M=4, cost=CostSpec(c_rate=3.0))
    rebuilt = OnlineSMOTEBagging(1, M=4, cost=CostSpec(c_rate=3.0))
    stream = RngStream(11, "online")
    for xi, yi in zip(X, y):
        reused.update(inst(xi, int(yi)), stream)
        rebuilt.update(inst(xi, int(yi)), RngStream(11, "online"))
    for a, b in zip(reused.members, rebuilt.members):
        for label in (0, 1):
            assert a.stats[label].t == b.stats[label].t
            assert np.array_equal(a.stats[label].mu, b.stats[label].mu)
    # replayed draws would present every negative equally often within a member
    n_neg = int((y == 0).sum())
    assert any(int(m.stats[0].t) % n_neg != 0 for m in rebuilt.members)


def test_online_boosting_learns_separable_stream():
    rng = np.random.default_rng(8)
    n = 600
    y = (rng.random(n) < 0.5).astype(int)
    X = rng.normal(size=(n, 2)) + 3.0 * (2 * y[:, None] - 1)
    ens = OnlineBoosting(2, M=5)
    stream = RngStream(2)
    for xi, yi in zip(X, y):
        ens.update(inst(xi, int(yi)), stream)
    assert np.mean(ens.predict_many(X) == y) > 0.9
    assert math.isfinite(sum(ens.member_weights()))
