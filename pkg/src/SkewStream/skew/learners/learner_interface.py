from abc import ABC, abstractmethod

import numpy as np


class BaseLearner(ABC):
    @abstractmethod
    def update(self, x: np.ndarray, y: int) -> None:
        raise NotImplementedError

    @abstractmethod
    def partial_fit(self, X: np.ndarray, y: np.ndarray) -> None:
        raise NotImplementedError

    @abstractmethod
    def score_many(self, X: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def predict_many(self, X: np.ndarray) -> np.ndarray:
        # ties go to the negative class
        return (self.score_many(X) > 0.5).astype(np.int8)

    def score(self, x: np.ndarray) -> float:
        return float(self.score_many(np.asarray(x, dtype=np.float64)[None, :])[0])

    def predict(self, x: np.ndarray) -> int:
        return int(self.score(x) > 0.5)


def learner_update(model: BaseLearner, instance) -> BaseLearner:
    model.update(instance.features, instance.label)
    return model


def learner_predict(model: BaseLearner, features: np.ndarray) -> int:
    return model.predict(features)


def learner_score(model: BaseLearner, features: np.ndarray) -> float:
    return model.score(features)
