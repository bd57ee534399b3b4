import random

import pytest

from seopinion.errors import DegenerateData, TooFewExamples
from seopinion.evaluation import (
    ConfusionMatrix,
    balanced_subsample,
    kfold_cv,
    metrics,
    stratified_folds,
)


def labels_for(cm: ConfusionMatrix) -> tuple[list[str], list[str]]:
    gold = ["positive"] * (cm.tp + cm.fn) + ["negative"] * (cm.fp + cm.tn)
    pred = (
        ["positive"] * cm.tp + ["negative"] * cm.fn
        + ["positive"] * cm.fp + ["negative"] * cm.tn
    )
    return gold, pred


def recount(gold: list[str], pred: list[str]) -> dict[str, float]:
    """Independent brute-force metric computation from raw label lists."""
    tp = sum(1 for g, p in zip(gold, pred) if g == "positive" and p == "positive")
    predicted_pos = sum(1 for p in pred if p == "positive")
    actual_pos = sum(1 for g in gold if g == "positive")
    correct = sum(1 for g, p in zip(gold, pred) if g == p)
    precision = tp / predicted_pos if predicted_pos else 0.0
    recall = tp / actual_pos if actual_pos else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return {
        "precision": precision,
        "recall": recall,
        "f1": f1,
        "accuracy": correct / len(gold),
    }


class ParityClassifier:
    """Learns the payload-parity -> label rule from training data; the test
    datasets are built so this rule predicts every example perfectly."""

    def __init__(self) -> None:
        self.rule: dict = {}

    def fit(self, examples):
        for payload, label in examples:
            self.rule[payload % 2] = label

    def predict(self, payload):
        return self.rule.get(payload % 2, "positive")


class ConstantClassifier:
    def fit(self, examples):
        pass

    def predict(self, payload):
        return "positive"


class TestMetrics:
    def test_hand_case(self):
        report = metrics(ConfusionMatrix(tp=6, fn=2, fp=3, tn=9))
        assert report.precision == pytest.approx(0.6667, abs=1e-4)
        assert report.recall == pytest.approx(0.75, abs=1e-4)
        assert report.f1 == pytest.approx(0.7059, abs=1e-4)
        assert report.accuracy == pytest.approx(0.75, abs=1e-4)

    def test_perfect_classifier(self):
        report = metrics(ConfusionMatrix(tp=5, fn=0, fp=0, tn=5))
        assert (report.precision, report.recall, report.f1, report.accuracy) == (1, 1, 1, 1)
        assert report.flags == ()

    def test_zero_denominator_flagged(self):
        report = metrics(ConfusionMatrix(tp=0, fn=4, fp=0, tn=6))
        assert report.precision == 0.0
        assert report.f1 == 0.0
        assert "precision_undefined" in report.flags

    def test_matches_recount_on_random_matrices(self):
        rng = random.Random(3)
        for _ in range(100):
            cm = ConfusionMatrix(
                tp=rng.randint(0, 30), fn=rng.randint(0, 30),
                fp=rng.randint(0, 30), tn=rng.randint(0, 30),
            )
            if cm.total == 0:
                continue
            gold, pred = labels_for(cm)
            assert ConfusionMatrix.from_labels(gold, pred) == cm
            expected = recount(gold, pred)
            report = metrics(cm)
            for name, value in expected.items():
                assert getattr(report, name) == pytest.approx(value, abs=1e-12)


class TestKFold:
    def _memorizable_data(self, n=20):
        return [(i, "positive" if i % 2 == 0 else "negative") for i in range(n)]

    def test_memorizable_data_scores_one(self):
        report = kfold_cv(self._memorizable_data(), k=10, reps=2, seed=1,
                          classifier_factory=ParityClassifier)
        assert report.accuracy == 1.0
        assert report.f1 == 1.0
        assert report.n_folds == 10
        assert report.n_reps == 2

    def test_too_few_examples(self):
        with pytest.raises(TooFewExamples):
            kfold_cv(self._memorizable_data(4), k=10, reps=1, seed=1,
                     classifier_factory=ParityClassifier)

    def test_seeded_determinism(self):
        kwargs = dict(k=5, reps=3, seed=42, classifier_factory=ConstantClassifier)
        data = self._memorizable_data(23)
        assert kfold_cv(data, **kwargs) == kfold_cv(data, **kwargs)

    def test_fold_partition_and_stratification(self):
        rng = random.Random(9)
        for _ in range(20):
            n = rng.randint(10, 40)
            data = [(i, "positive" if rng.random() < 0.6 else "negative") for i in range(n)]
            if len({label for _, label in data}) < 2:
                continue
            k = rng.randint(2, 5)
            folds = stratified_folds(data, k, random.Random(7))
            flat = sorted(i for fold in folds for i in fold)
            assert flat == list(range(n))  # every example in exactly one fold
            pos_total = sum(1 for _, label in data if label == "positive")
            for fold in folds:
                pos_in_fold = sum(1 for i in fold if data[i][1] == "positive")
                expected = pos_total * len(fold) / n
                assert abs(pos_in_fold - expected) <= 1.0 + 1e-9


class TestBalancedSubsample:
    def test_imbalanced_split_downsamples_majority(self):
        data = [(i, "positive") for i in range(62)] + [(i + 100, "negative") for i in range(38)]
        (subset,) = balanced_subsample(data, seed=0, n_subsets=1)
        assert sum(1 for _, label in subset if label == "positive") == 38
        assert sum(1 for _, label in subset if label == "negative") == 38

    def test_balanced_input_is_a_permutation(self):
        data = [(i, "positive") for i in range(5)] + [(i + 10, "negative") for i in range(5)]
        (subset,) = balanced_subsample(data, seed=0, n_subsets=1)
        assert sorted(subset) == sorted(data)

    def test_single_class_raises(self):
        with pytest.raises(DegenerateData):
            balanced_subsample([(1, "positive"), (2, "positive")], seed=0)

    def test_subsets_differ_but_are_deterministic(self):
        data = [(i, "positive") for i in range(30)] + [(i + 100, "negative") for i in range(10)]
        first = balanced_subsample(data, seed=5, n_subsets=3)
        second = balanced_subsample(data, seed=5, n_subsets=3)
        assert first == second
        assert len({tuple(sorted(s)) for s in first}) > 1
