"""Phase B: filter reviews to opinionated sentences, map them onto the
hierarchy, and classify per-aspect polarity.

A sentence is opinionated when it contains at least one noun and one
adjective and its length-normalized lexicon score clears a threshold. A
sentence maps to an aspect when an exact lemma n-gram matches the aspect
term or when some noun is embedding-similar to it; sentences matching a
category but none of its children land in the synthetic General slot.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .aspects import GENERAL_CHILD, AspectHierarchy, AspectTerm
from .errors import DegenerateData, SchemaError, UntrainedModel
from .nlp import (
    EmbeddingTable,
    SentimentLexicon,
    Tag,
    TaggedSentence,
    lexicon_score,
    pos_tag,
    preprocess,
    safe_cosine,
    split_sentences,
    term_vector,
    tokenize,
)

_SCORED_TAGS = frozenset({Tag.NOUN, Tag.ADJ})
_POLARITY_TAGS = frozenset({Tag.NOUN, Tag.ADJ, Tag.ADV, Tag.VERB})


@dataclass(frozen=True)
class OpinionSentence:
    """A review sentence that passed subjectivity detection.

    `text` keeps the raw sentence for display; `tagged` is built from its
    preprocessed form. pos_score/neg_score are the raw lexicon sums over
    noun and adjective tokens; the normalized variants divide by the count
    of those tokens.
    """

    text: str
    tagged: TaggedSentence
    pos_score: float
    neg_score: float
    product_id: str = ""

    @property
    def noun_adj_count(self) -> int:
        return sum(1 for t in self.tagged.tokens if t.tag in _SCORED_TAGS)

    @property
    def norm_pos(self) -> float:
        return self.pos_score / self.noun_adj_count

    @property
    def norm_neg(self) -> float:
        return self.neg_score / self.noun_adj_count


@dataclass(frozen=True)
class MappedOpinion:
    """One ⟨category, child, sentence⟩ mapping; child None means General."""

    category: AspectTerm
    child: AspectTerm | None
    sentence: OpinionSentence
    polarity: str | None = None  # "positive" | "negative" once classified

    @property
    def child_name(self) -> str:
        return self.child.term if self.child is not None else GENERAL_CHILD

    @property
    def aspect_term(self) -> str:
        """The term polarity is conditioned on: the child, else the category."""
        return self.child.term if self.child is not None else self.category.term


def detect_subjectivity(
    reviews: Sequence[str],
    lexicon: SentimentLexicon,
    theta_subj: float = 0.1,
    product_id: str = "",
) -> list[OpinionSentence]:
    """Split reviews into sentences and keep the opinionated ones.

    Per sentence: preprocess, tag, require a noun and an adjective, sum the
    lexicon (pos, neg) over noun/adjective tokens, normalize by their count,
    accept when max(norm_pos, norm_neg) > theta_subj.
    """
    accepted: list[OpinionSentence] = []
    for review in reviews:
        for raw_sentence in split_sentences(review):
            tagged = pos_tag(tokenize(preprocess(raw_sentence)))
            if not (tagged.has_tag(Tag.NOUN) and tagged.has_tag(Tag.ADJ)):
                continue
            pos_sum = neg_sum = 0.0
            count = 0
            for token in tagged.tokens:
                if token.tag in _SCORED_TAGS:
                    pos, neg = lexicon_score(lexicon, token.lemma)
                    pos_sum += pos
                    neg_sum += neg
                    count += 1
            if max(pos_sum, neg_sum) / count > theta_subj:
                accepted.append(
                    OpinionSentence(
                        text=raw_sentence,
                        tagged=tagged,
                        pos_score=pos_sum,
                        neg_score=neg_sum,
                        product_id=product_id,
                    )
                )
    return accepted


def _embed_token(table: EmbeddingTable, token) -> np.ndarray:
    vec = table.vectors.get(token.lemma)
    if vec is None:
        vec = table.vectors.get(token.surface.lower())
    return vec if vec is not None else np.zeros(table.dim)


def match(
    aspect: AspectTerm | str,
    sentence: OpinionSentence,
    table: EmbeddingTable,
    theta_map: float = 0.7,
) -> bool:
    """True when the sentence mentions the aspect.

    Clause (a): some token lemma, or contiguous lemma bigram/trigram, equals
    the aspect term. Clause (b): some noun token's vector has cosine >=
    theta_map with the aspect term's vector.
    """
    term = aspect.term if isinstance(aspect, AspectTerm) else aspect
    lemmas = sentence.tagged.lemmas()
    for n in (1, 2, 3):
        for i in range(len(lemmas) - n + 1):
            if " ".join(lemmas[i : i + n]) == term:
                return True
    aspect_vec = term_vector(table, term)
    if not np.any(aspect_vec):
        return False
    for token in sentence.tagged.tokens:
        if token.tag is Tag.NOUN:
            if safe_cosine(_embed_token(table, token), aspect_vec) >= theta_map:
                return True
    return False


def map_aspects(
    hierarchy: AspectHierarchy,
    opinions: Sequence[OpinionSentence],
    table: EmbeddingTable,
    theta_map: float = 0.7,
) -> list[MappedOpinion]:
    """Map each opinionated sentence onto matching ⟨category, child⟩ pairs.

    For every category whose parent matches, the sentence is paired with
    every matching child; when no child matches it falls into the General
    slot. A sentence may map under several categories.
    """
    mapped: list[MappedOpinion] = []
    for category in hierarchy.categories:
        for sentence in opinions:
            if not match(category.parent, sentence, table, theta_map):
                continue
            hits = [
                child for child in category.children
                if match(child, sentence, table, theta_map)
            ]
            if hits:
                mapped.extend(
                    MappedOpinion(category=category.parent, child=c, sentence=sentence)
                    for c in hits
                )
            else:
                mapped.append(
                    MappedOpinion(category=category.parent, child=None, sentence=sentence)
                )
    return mapped


# ---------------------------------------------------------------------------
# polarity models
# ---------------------------------------------------------------------------

LEXICON_BASELINE = "lexicon_baseline"
LINEAR_EMBEDDING = "linear_embedding"

_MODEL_FORMAT = 1


@dataclass(frozen=True)
class PolarityModel:
    """Either the lexicon sign baseline or a trained linear model over
    concat(mean sentence vector, aspect vector) with a bias term."""

    kind: str
    dim: int = 0
    weights: np.ndarray | None = None  # length 2*dim + 1

    def __post_init__(self) -> None:
        if self.kind not in (LEXICON_BASELINE, LINEAR_EMBEDDING):
            raise ValueError(f"unknown polarity model kind {self.kind!r}")
        if self.weights is not None:
            if not np.all(np.isfinite(self.weights)):
                raise ValueError("model weights must be finite")
            if self.weights.shape != (2 * self.dim + 1,):
                raise ValueError("weights must have length 2*dim + 1")


def sentence_vector(table: EmbeddingTable, tagged: TaggedSentence) -> np.ndarray:
    """Mean of in-vocabulary token vectors; zeros when nothing is known."""
    vecs = [v for v in (_embed_token(table, t) for t in tagged.tokens) if np.any(v)]
    if not vecs:
        return np.zeros(table.dim)
    return np.mean(vecs, axis=0)


def pair_features(pair: MappedOpinion, table: EmbeddingTable) -> np.ndarray:
    return np.concatenate(
        [sentence_vector(table, pair.sentence.tagged), term_vector(table, pair.aspect_term)]
    )


def classify_polarity(
    pair: MappedOpinion,
    model: PolarityModel,
    lexicon: SentimentLexicon | None = None,
    table: EmbeddingTable | None = None,
) -> str:
    """Classify one mapped sentence as positive or negative.

    The lexicon baseline sums (pos - neg) over noun/adjective/adverb/verb
    lemmas and breaks ties positive. The linear model thresholds
    w · concat(sentence vec, aspect vec) + b at zero, so the same sentence
    can flip polarity across aspects.
    """
    if model.kind == LEXICON_BASELINE:
        if lexicon is None:
            raise ValueError("lexicon baseline needs a SentimentLexicon")
        total = 0.0
        for token in pair.sentence.tagged.tokens:
            if token.tag in _POLARITY_TAGS:
                pos, neg = lexicon_score(lexicon, token.lemma)
                total += pos - neg
        return "positive" if total >= 0 else "negative"
    if model.weights is None:
        raise UntrainedModel("linear model has no weights; train or load it first")
    if table is None:
        raise ValueError("linear model needs an EmbeddingTable")
    features = pair_features(pair, table)
    score = float(features @ model.weights[:-1] + model.weights[-1])
    return "positive" if score >= 0 else "negative"


def loss_and_grad(
    weights: np.ndarray, features: np.ndarray, labels: np.ndarray
) -> tuple[float, np.ndarray]:
    """Mean logistic loss and its gradient for w = [coef..., bias]."""
    z = features @ weights[:-1] + weights[-1]
    # stable log(1 + exp(-y*z)) with y in {-1, +1}
    margins = labels * z
    loss = float(np.mean(np.logaddexp(0.0, -margins)))
    sig = 1.0 / (1.0 + np.exp(margins))
    coef_grad = -(features * (labels * sig)[:, None]).mean(axis=0)
    bias_grad = float(-(labels * sig).mean())
    return loss, np.concatenate([coef_grad, [bias_grad]])


def train_polarity_model(
    pairs: Sequence[tuple[MappedOpinion, str]],
    table: EmbeddingTable,
    learning_rate: float = 0.1,
    max_epochs: int = 500,
    tolerance: float = 1e-6,
) -> PolarityModel:
    """Fit the linear model by full-batch gradient descent.

    Deterministic: weights start at zero and the data order is irrelevant
    to the batch gradient. Raises DegenerateData unless both labels occur.
    """
    labels = np.array([1.0 if label == "positive" else -1.0 for _, label in pairs])
    if len(pairs) < 2 or len(set(labels.tolist())) < 2:
        raise DegenerateData("training needs at least one example of each class")
    features = np.stack([pair_features(pair, table) for pair, _ in pairs])
    weights = np.zeros(features.shape[1] + 1)
    previous_loss = np.inf
    for _ in range(max_epochs):
        loss, grad = loss_and_grad(weights, features, labels)
        weights = weights - learning_rate * grad
        if abs(previous_loss - loss) < tolerance:
            break
        previous_loss = loss
    return PolarityModel(kind=LINEAR_EMBEDDING, dim=table.dim, weights=weights)


def save_model(model: PolarityModel, path: str | Path) -> None:
    payload = {
        "format": _MODEL_FORMAT,
        "kind": model.kind,
        "dim": model.dim,
        "weights": model.weights.tolist() if model.weights is not None else None,
    }
    Path(path).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")


def load_model(path: str | Path) -> PolarityModel:
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: not valid JSON: {exc}") from exc
    if payload.get("format") != _MODEL_FORMAT:
        raise SchemaError(f"{path}: unsupported model format {payload.get('format')!r}")
    weights = payload.get("weights")
    return PolarityModel(
        kind=payload.get("kind", ""),
        dim=int(payload.get("dim", 0)),
        weights=np.array(weights, dtype=np.float64) if weights is not None else None,
    )
