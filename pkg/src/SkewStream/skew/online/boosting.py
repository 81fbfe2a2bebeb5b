"""
Online boosting family.

Every member walks the same sequence per instance: decay its accumulators
(ns mode only), draw k ~ Poisson(rate) presentations, present, predict the
instance, then move lambda on for the next member. Bookkeeping always uses
the lambda the member received, never the resampling rate derived from it.
"""

import logging

from ..core.costs import CostSpec, UNIT_COST
from ..core.errors import ArgumentError
from ..core.poisson import poisson_sample
from ..core.types import POSITIVE
from ..core.voting import VoteRule, clamp, log_odds_weight, log_ratio_weight
from .online_interface import OnlineEnsemble

logger = logging.getLogger(__name__)

VARIANTS = (1, 2, 3)


class OnlineBoosting(OnlineEnsemble):
    vote_rule = VoteRule.LOG_ODDS

    def _rates(self, m: int, y: int, lam: float):
        """(real presentation rate, synthetic presentation rate) for member m."""
        return lam, 0.0

    def _update(self, x, y, streams):
        lam = 1.0
        for m in range(self.M):
            st = self._decay(m)
            if y == POSITIVE:
                st.lambda_pos += lam
            else:
                st.lambda_neg += lam
            rate, synthetic = self._rates(m, y, lam)
            rng = streams[m]
            self._present(m, x, y, poisson_sample(rate, rng))
            if synthetic > 0:
                self._present_synthetic(m, poisson_sample(synthetic, rng), rng)
            correct = self.members[m].predict(x) == y
            lam = self._step(m, y, correct, lam)

    def _step(self, m: int, y: int, correct: bool, lam: float) -> float:
        st = self.states[m]
        if correct:
            st.lambda_sc += lam
            return lam / (2.0 * (1.0 - clamp(st.eps)))
        st.lambda_sw += lam
        return lam / (2.0 * clamp(st.eps))

    def member_weights(self):
        with self.lock:
            return [log_odds_weight(st.eps) if st.trained else 0.0 for st in self.states]

    def violations(self) -> int:
        with self.lock:
            return sum(1 for st in self.states if st.trained and st.eps >= 0.5)


class OnlineAdaC2(OnlineBoosting):
    vote_rule = VoteRule.LOG_WACC_WERR

    def _step(self, m, y, correct, lam):
        st = self.states[m]
        c = self.cost.cost_of(y)
        st.lambda_sum += lam
        if correct:
            st.lambda_sc += lam
            if y == POSITIVE:
                st.lambda_tp += c * lam
            else:
                st.lambda_tn += c * lam
            return c * lam / (2.0 * clamp(st.wacc))
        st.lambda_sw += lam
        if y == POSITIVE:
            st.lambda_fn += c * lam
        else:
            st.lambda_fp += c * lam
        return c * lam / (2.0 * clamp(st.werr))

    def member_weights(self):
        with self.lock:
            return [log_ratio_weight(st.wacc, st.werr) if st.trained else 0.0 for st in self.states]

    def violations(self) -> int:
        with self.lock:
            return sum(1 for st in self.states if st.trained and st.wacc <= st.werr)


class OnlineCSB2(OnlineBoosting):
    def _step(self, m, y, correct, lam):
        st = self.states[m]
        c = self.cost.cost_of(y)
        st.lambda_sum += lam
        if correct:
            st.lambda_sc += lam
            if y == POSITIVE:
                st.lambda_tp += c * lam
            else:
                st.lambda_tn += c * lam
        else:
            st.lambda_sw += lam
            if y == POSITIVE:
                st.lambda_fn += c * lam
            else:
                st.lambda_fp += c * lam
        eps, werr = clamp(st.eps), clamp(st.werr)
        spread = eps + werr
        if correct:
            return lam * ((eps / spread) / (1.0 - eps))
        return c * lam / spread

    def violations(self) -> int:
        with self.lock:
            return sum(1 for st in self.states
                       if st.trained and (st.eps >= 1.0 or st.eps ** 2 / (1.0 - st.eps) >= st.werr))


def _validate_variant(variant: int):
    if variant not in VARIANTS:
        raise ArgumentError(f"Variant must be one of {VARIANTS}, got {variant!r}")


class OnlineRUSBoost(OnlineBoosting):
    def __init__(self, d: int, M: int = 10, cost: CostSpec = UNIT_COST, variant: int = 1, **kwargs):
        _validate_variant(variant)
        super().__init__(d, M, cost, **kwargs)
        self.variant = variant

    def rus_rate(self, m: int, y: int, lam: float) -> float:
        if not self.both_classes_seen:
            return lam
        st = self.states[m]
        C = self.cost.c_rate
        n_pos, n_neg = self.counts.n_pos, self.counts.n_neg
        n = n_pos + n_neg
        if self.variant == 3:
            return lam if y == POSITIVE else lam / C
        total = st.lambda_pos + st.lambda_neg
        if self.variant == 1:
            scale = (C + 1.0) * n_pos / n
            if y == POSITIVE:
                return lam * total / (st.lambda_pos + st.lambda_neg * C * n_pos / n_neg) * scale
            return lam * total / (st.lambda_neg + st.lambda_pos * n_neg / (C * n_pos)) * scale
        if y == POSITIVE:
            return lam * (n_pos / n) / (st.lambda_pos / total)
        return lam * (C * n_pos / n) / (st.lambda_neg / total)

    def _rates(self, m, y, lam):
        return self.rus_rate(m, y, lam), 0.0


class OnlineSMOTEBoost(OnlineBoosting):
    uses_buffer = True

    def __init__(self, d: int, M: int = 10, cost: CostSpec = UNIT_COST, variant: int = 1, **kwargs):
        _validate_variant(variant)
        super().__init__(d, M, cost, **kwargs)
        self.variant = variant

    def smote_rates(self, m: int, y: int, lam: float):
        """(lambda', lambda^SMOTE) for member m."""
        if not self.both_classes_seen:
            return lam, 0.0
        st = self.states[m]
        C = self.cost.c_rate
        n_pos, n_neg = self.counts.n_pos, self.counts.n_neg
        lam_prime = lam
        if self.variant == 2:
            total = st.lambda_pos + st.lambda_neg
            if y == POSITIVE:
                lam_prime = lam * (n_pos / (n_pos + n_neg)) / (st.lambda_pos / total)
            else:
                lam_prime = lam * (n_neg / (n_pos + n_neg)) / (st.lambda_neg / total)
        if y != POSITIVE:
            return lam_prime, 0.0
        if self.variant == 1:
            synthetic = n_neg / (C * n_pos) - 1.0
        elif self.variant == 2:
            synthetic = lam_prime * (n_neg / (C * n_pos) - 1.0)
        else:
            synthetic = (C - 1.0) * lam
        return lam_prime, max(synthetic, 0.0)

    def _rates(self, m, y, lam):
        return self.smote_rates(m, y, lam)


def online_boosting_update(ens: OnlineBoosting, instance, rng):
    return ens.update(instance, rng)


def online_adac2_update(ens: OnlineAdaC2, instance, rng):
    return ens.update(instance, rng)


def online_csb2_update(ens: OnlineCSB2, instance, rng):
    return ens.update(instance, rng)


def online_rusboost_update(ens: OnlineRUSBoost, instance, variant: int, rng):
    if ens.variant != variant:
        raise ArgumentError(f"Ensemble runs variant {ens.variant}, not {variant}")
    return ens.update(instance, rng)


def online_smoteboost_update(ens: OnlineSMOTEBoost, instance, variant: int, rng):
    if ens.variant != variant:
        raise ArgumentError(f"Ensemble runs variant {ens.variant}, not {variant}")
    return ens.update(instance, rng)
