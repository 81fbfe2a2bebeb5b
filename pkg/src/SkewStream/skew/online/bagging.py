from ..core.poisson import poisson_sample
from ..core.types import POSITIVE
from .online_interface import OnlineEnsemble


class OnlineBagging(OnlineEnsemble):
    def _update(self, x, y, streams):
        for m in range(self.M):
            self._present(m, x, y, poisson_sample(1.0, streams[m]))


class OnlineUnderOverBagging(OnlineEnsemble):
    """Member m sees positives at rate a*C and negatives at rate a, with a = m/M."""

    def _update(self, x, y, streams):
        C = self.cost.c_rate
        for m in range(self.M):
            a = (m + 1) / self.M
            lam = a * C if y == POSITIVE else a
            self._present(m, x, y, poisson_sample(lam, streams[m]))


class OnlineSMOTEBagging(OnlineEnsemble):
    uses_buffer = True

    def _update(self, x, y, streams):
        C = self.cost.c_rate
        for m in range(self.M):
            a = (m + 1) / self.M
            rng = streams[m]
            if y == POSITIVE:
                self._present(m, x, y, poisson_sample(a * C, rng))
                self._present_synthetic(m, poisson_sample((1.0 - a) * C, rng), rng)
            else:
                self._present(m, x, y, poisson_sample(a, rng))


def online_bagging_update(ens: OnlineBagging, instance, rng):
    return ens.update(instance, rng)


def online_uob_update(ens: OnlineUnderOverBagging, instance, rng):
    return ens.update(instance, rng)


def online_smotebagging_update(ens: OnlineSMOTEBagging, instance, rng):
    return ens.update(instance, rng)
