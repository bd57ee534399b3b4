"""Evaluation machinery: confusion-matrix metrics, repeated stratified
k-fold cross-validation, and class-imbalance subsampling.

Everything is seeded; no wall-clock entropy anywhere, so a report is
reproducible bit for bit.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Callable, Protocol, Sequence, TypeVar

from .errors import DegenerateData, TooFewExamples

POSITIVE = "positive"
NEGATIVE = "negative"

X = TypeVar("X")
Example = tuple[Any, str]  # (features/payload, gold label)


@dataclass(frozen=True)
class ConfusionMatrix:
    tp: int = 0
    fn: int = 0
    fp: int = 0
    tn: int = 0

    def __post_init__(self) -> None:
        if min(self.tp, self.fn, self.fp, self.tn) < 0:
            raise ValueError("confusion-matrix cells must be non-negative")

    @property
    def total(self) -> int:
        return self.tp + self.fn + self.fp + self.tn

    @staticmethod
    def from_labels(gold: Sequence[str], predicted: Sequence[str]) -> "ConfusionMatrix":
        if len(gold) != len(predicted):
            raise ValueError("gold/predicted length mismatch")
        tp = fn = fp = tn = 0
        for g, p in zip(gold, predicted):
            if g == POSITIVE:
                tp, fn = (tp + 1, fn) if p == POSITIVE else (tp, fn + 1)
            else:
                fp, tn = (fp + 1, tn) if p == POSITIVE else (fp, tn + 1)
        return ConfusionMatrix(tp=tp, fn=fn, fp=fp, tn=tn)


@dataclass(frozen=True)
class MetricReport:
    precision: float
    recall: float
    f1: float
    accuracy: float
    n_folds: int = 0
    n_reps: int = 0
    flags: tuple[str, ...] = ()   # e.g. "precision_undefined" when 0/0 hit


def metrics(cm: ConfusionMatrix) -> MetricReport:
    """Precision, recall, F1 and accuracy; 0/0 yields 0 with a flag."""
    if cm.total < 1:
        raise ValueError("metrics need at least one prediction")
    flags: list[str] = []

    def ratio(num: int, den: int, name: str) -> float:
        if den == 0:
            flags.append(f"{name}_undefined")
            return 0.0
        return num / den

    recall = ratio(cm.tp, cm.tp + cm.fn, "recall")
    precision = ratio(cm.tp, cm.tp + cm.fp, "precision")
    if precision + recall == 0.0:
        f1 = 0.0
        if "recall_undefined" not in flags and "precision_undefined" not in flags:
            flags.append("f1_undefined")
    else:
        f1 = 2 * precision * recall / (precision + recall)
    accuracy = (cm.tp + cm.tn) / cm.total
    return MetricReport(
        precision=precision, recall=recall, f1=f1, accuracy=accuracy, flags=tuple(flags)
    )


class Classifier(Protocol):
    def fit(self, examples: Sequence[Example]) -> None: ...
    def predict(self, payload: Any) -> str: ...


def stratified_folds(
    data: Sequence[Example], k: int, rng: random.Random
) -> list[list[int]]:
    """Index folds with per-class round-robin assignment after a shuffle.

    Every example lands in exactly one fold; per-fold class counts differ
    from perfect proportionality by at most one example per class.
    """
    by_class: dict[str, list[int]] = {}
    for i, (_, label) in enumerate(data):
        by_class.setdefault(label, []).append(i)
    folds: list[list[int]] = [[] for _ in range(k)]
    offset = 0
    for label in sorted(by_class):
        indices = by_class[label]
        rng.shuffle(indices)
        for j, index in enumerate(indices):
            folds[(offset + j) % k].append(index)
        offset += len(indices)
    return [sorted(fold) for fold in folds]


def kfold_cv(
    data: Sequence[Example],
    k: int,
    reps: int,
    seed: int,
    classifier_factory: Callable[[], Classifier],
) -> MetricReport:
    """Repeated stratified k-fold cross-validation, metrics averaged over
    all k*reps test folds."""
    if k < 2 or len(data) < k:
        raise TooFewExamples(f"need at least k={k} examples, got {len(data)}")
    sums = {"precision": 0.0, "recall": 0.0, "f1": 0.0, "accuracy": 0.0}
    flags: set[str] = set()
    n_evals = 0
    for rep in range(reps):
        rng = random.Random(seed * 1_000_003 + rep)
        folds = stratified_folds(data, k, rng)
        for test_indices in folds:
            test_set = set(test_indices)
            train = [data[i] for i in range(len(data)) if i not in test_set]
            test = [data[i] for i in test_indices]
            if not test:
                continue
            model = classifier_factory()
            model.fit(train)
            gold = [label for _, label in test]
            predicted = [model.predict(payload) for payload, _ in test]
            report = metrics(ConfusionMatrix.from_labels(gold, predicted))
            for name in sums:
                sums[name] += getattr(report, name)
            flags.update(report.flags)
            n_evals += 1
    return MetricReport(
        precision=sums["precision"] / n_evals,
        recall=sums["recall"] / n_evals,
        f1=sums["f1"] / n_evals,
        accuracy=sums["accuracy"] / n_evals,
        n_folds=k,
        n_reps=reps,
        flags=tuple(sorted(flags)),
    )


def balanced_subsample(
    data: Sequence[Example], seed: int, n_subsets: int = 1
) -> list[list[Example]]:
    """Equal-class datasets obtained by downsampling the majority class.

    Each subset keeps every minority example and a seeded sample of the
    majority class of the same size; already balanced data simply gets
    reshuffled.
    """
    positives = [e for e in data if e[1] == POSITIVE]
    negatives = [e for e in data if e[1] != POSITIVE]
    if not positives or not negatives:
        raise DegenerateData("balanced subsampling needs both classes")
    size = min(len(positives), len(negatives))
    subsets: list[list[Example]] = []
    for i in range(n_subsets):
        rng = random.Random(seed * 1_000_003 + i)
        pos = positives[:] if len(positives) == size else rng.sample(positives, size)
        neg = negatives[:] if len(negatives) == size else rng.sample(negatives, size)
        subset = pos + neg
        rng.shuffle(subset)
        subsets.append(subset)
    return subsets


def format_report_table(rows: list[tuple[str, MetricReport]]) -> str:
    """Plain-text table of metric reports, one row per configuration."""
    header = f"{'configuration':<28} {'P':>8} {'R':>8} {'F1':>8} {'Acc':>8}  folds reps"
    lines = [header, "-" * len(header)]
    for name, report in rows:
        lines.append(
            f"{name:<28} {report.precision:>8.4f} {report.recall:>8.4f} "
            f"{report.f1:>8.4f} {report.accuracy:>8.4f}  {report.n_folds:>5} {report.n_reps:>4}"
        )
    return "\n".join(lines)
