from .learner_interface import BaseLearner, learner_predict, learner_score, learner_update
from .gaussian_stats import GaussianClassStats, regularize
from .gaussian_learners import LearnerKind, GaussianLearner, NaiveBayes, LDA, QDA, make_learner

__all__ = [
    "BaseLearner", "learner_update", "learner_predict", "learner_score",
    "GaussianClassStats", "regularize",
    "LearnerKind", "GaussianLearner", "NaiveBayes", "LDA", "QDA", "make_learner",
]
