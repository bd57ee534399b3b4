"""Pipeline driver and per-product aspect summaries.

Phase A builds one hierarchy from every record's details; Phase B runs per
product: subjectivity detection over its reviews, aspect mapping, polarity
classification, then roll-up into counts and 1-5 ratings. The result is an
immutable summary store that the HTTP service serves read-only.
"""

from __future__ import annotations

import hashlib
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

from .aspects import GENERAL_CHILD, AspectHierarchy, extract_hierarchy, hierarchy_to_dict
from .config import PipelineConfig
from .errors import EmptyAspect, SchemaError, UntrainedModel
from .ingestion import Corpus
from .nlp import (
    EmbeddingTable,
    SentimentLexicon,
    load_bundled_embeddings,
    load_bundled_lexicon,
    load_embeddings,
    load_lexicon,
)
from .opinions import (
    LEXICON_BASELINE,
    MappedOpinion,
    PolarityModel,
    classify_polarity,
    detect_subjectivity,
    load_model,
    map_aspects,
)

logger = logging.getLogger(__name__)

POSITIVE_RATING = 5
NEGATIVE_RATING = 1


def aspect_rating(n_pos: int, n_neg: int) -> float:
    """Average of the per-sentence scores (positive 5, negative 1)."""
    if n_pos + n_neg < 1:
        raise EmptyAspect("rating undefined for an aspect with no sentences")
    return (POSITIVE_RATING * n_pos + NEGATIVE_RATING * n_neg) / (n_pos + n_neg)


@dataclass(frozen=True)
class AspectSummary:
    term: str
    n_sentences: int
    n_pos: int
    n_neg: int
    rating: float | None              # None when n_sentences == 0
    children: tuple["AspectSummary", ...] = ()


@dataclass(frozen=True)
class ProductSummary:
    product_id: str
    title: str
    site_id: str
    categories: tuple[AspectSummary, ...]
    total_sentences: int


def _leaf_summary(term: str, n_pos: int, n_neg: int) -> AspectSummary:
    n = n_pos + n_neg
    return AspectSummary(
        term=term,
        n_sentences=n,
        n_pos=n_pos,
        n_neg=n_neg,
        rating=aspect_rating(n_pos, n_neg) if n else None,
    )


def summarize_product(
    hierarchy: AspectHierarchy,
    classified: list[MappedOpinion],
    product_id: str = "",
    title: str = "",
    site_id: str = "",
) -> ProductSummary:
    """Roll classified pairs up into per-child and per-category tallies.

    Every hierarchy category appears in the output (zero-filled when
    unmentioned); children are ordered by descending sentence count then
    term. A sentence mapped under k categories counts k times in
    total_sentences.
    """
    tallies: dict[tuple[str, str], list[int]] = {}
    for pair in classified:
        if pair.polarity not in ("positive", "negative"):
            raise ValueError("summarize_product needs classified pairs")
        key = (pair.category.term, pair.child_name)
        bucket = tallies.setdefault(key, [0, 0])
        bucket[0 if pair.polarity == "positive" else 1] += 1

    categories: list[AspectSummary] = []
    for category in hierarchy.categories:
        children: list[AspectSummary] = []
        cat_pos = cat_neg = 0
        for child_name in category.child_names():
            n_pos, n_neg = tallies.get((category.parent.term, child_name), (0, 0))
            children.append(_leaf_summary(child_name, n_pos, n_neg))
            cat_pos += n_pos
            cat_neg += n_neg
        children.sort(key=lambda c: (-c.n_sentences, c.term))
        n = cat_pos + cat_neg
        categories.append(
            AspectSummary(
                term=category.parent.term,
                n_sentences=n,
                n_pos=cat_pos,
                n_neg=cat_neg,
                rating=aspect_rating(cat_pos, cat_neg) if n else None,
                children=tuple(children),
            )
        )
    categories.sort(key=lambda c: (-c.n_sentences, c.term))
    return ProductSummary(
        product_id=product_id,
        title=title,
        site_id=site_id,
        categories=tuple(categories),
        total_sentences=sum(c.n_sentences for c in categories),
    )


@dataclass(frozen=True)
class SummaryStore:
    """One pipeline run's output: shared hierarchy, per-product summaries,
    and the mapped sentences keyed by (product, category, child)."""

    product_type: str
    hierarchy: AspectHierarchy
    summaries: dict[str, ProductSummary]
    sentences: dict[str, dict[str, dict[str, list[tuple[str, str]]]]]
    version: str = ""

    def sentence_list(self, product_id: str, category: str, child: str) -> list[tuple[str, str]]:
        return self.sentences.get(product_id, {}).get(category, {}).get(child, [])


def _resolve_resources(
    config: PipelineConfig,
    lexicon: SentimentLexicon | None,
    table: EmbeddingTable | None,
) -> tuple[SentimentLexicon, EmbeddingTable]:
    if lexicon is None:
        lexicon = (
            load_lexicon(config.lexicon_path) if config.lexicon_path else load_bundled_lexicon()
        )
    if table is None:
        table = (
            load_embeddings(config.embeddings_path)
            if config.embeddings_path
            else load_bundled_embeddings()
        )
    return lexicon, table


def _resolve_model(config: PipelineConfig) -> PolarityModel:
    if config.polarity_model == LEXICON_BASELINE:
        return PolarityModel(kind=LEXICON_BASELINE)
    if config.model_path is None:
        raise UntrainedModel("linear_embedding model requires model_path")
    return load_model(config.model_path)


def run_pipeline(
    corpus: Corpus,
    config: PipelineConfig = PipelineConfig(),
    lexicon: SentimentLexicon | None = None,
    table: EmbeddingTable | None = None,
) -> SummaryStore:
    """Run both phases over a corpus and assemble the summary store.

    Deterministic: the same corpus, config and data files produce an
    identical store (the version stamp is a content hash).
    """
    if not corpus.records:
        raise ValueError("run_pipeline needs a nonempty corpus")
    lexicon, table = _resolve_resources(config, lexicon, table)
    model = _resolve_model(config)

    hierarchy = extract_hierarchy(
        corpus, table,
        theta_sel=config.theta_sel,
        theta_clu=config.theta_clu,
        min_support=config.min_support,
    )

    summaries: dict[str, ProductSummary] = {}
    sentences: dict[str, dict[str, dict[str, list[tuple[str, str]]]]] = {}
    for record in corpus.records:
        opinions = detect_subjectivity(
            record.reviews, lexicon, config.theta_subj, product_id=record.product_id
        )
        mapped = map_aspects(hierarchy, opinions, table, config.theta_map)
        classified = [
            MappedOpinion(
                category=pair.category,
                child=pair.child,
                sentence=pair.sentence,
                polarity=classify_polarity(pair, model, lexicon=lexicon, table=table),
            )
            for pair in mapped
        ]
        summaries[record.product_id] = summarize_product(
            hierarchy, classified, record.product_id, record.title, record.site_id
        )
        per_product = sentences.setdefault(record.product_id, {})
        for pair in classified:
            per_cat = per_product.setdefault(pair.category.term, {})
            per_cat.setdefault(pair.child_name, []).append(
                (pair.sentence.text, pair.polarity)
            )
        logger.info("product %s: %d opinionated sentences, %d mappings",
                    record.product_id, len(opinions), len(mapped))

    store = SummaryStore(
        product_type=corpus.product_type,
        hierarchy=hierarchy,
        summaries=summaries,
        sentences=sentences,
    )
    return SummaryStore(
        product_type=store.product_type,
        hierarchy=store.hierarchy,
        summaries=store.summaries,
        sentences=store.sentences,
        version=_content_version(store),
    )


# ---------------------------------------------------------------------------
# persistence
# ---------------------------------------------------------------------------

def _summary_to_dict(summary: AspectSummary) -> dict:
    out = {
        "term": summary.term,
        "nSentences": summary.n_sentences,
        "nPos": summary.n_pos,
        "nNeg": summary.n_neg,
        "rating": summary.rating,
    }
    if summary.children:
        out["children"] = [_summary_to_dict(c) for c in summary.children]
    return out


def _product_to_dict(product: ProductSummary) -> dict:
    return {
        "productId": product.product_id,
        "title": product.title,
        "siteId": product.site_id,
        "totalSentences": product.total_sentences,
        "categories": [_summary_to_dict(c) for c in product.categories],
    }


def store_to_dict(store: SummaryStore) -> dict:
    return {
        "version": store.version,
        "productType": store.product_type,
        "hierarchy": hierarchy_to_dict(store.hierarchy),
        "products": [_product_to_dict(store.summaries[pid]) for pid in store.summaries],
        "sentences": {
            pid: {
                cat: {
                    child: [{"text": t, "polarity": p} for t, p in items]
                    for child, items in per_cat.items()
                }
                for cat, per_cat in per_product.items()
            }
            for pid, per_product in store.sentences.items()
        },
    }


def _content_version(store: SummaryStore) -> str:
    payload = store_to_dict(store)
    payload.pop("version", None)
    canon = json.dumps(payload, sort_keys=True, ensure_ascii=False)
    return hashlib.sha256(canon.encode("utf-8")).hexdigest()[:12]


def save_store(store: SummaryStore, path: str | Path) -> None:
    text = json.dumps(store_to_dict(store), indent=2, ensure_ascii=False) + "\n"
    Path(path).write_text(text, encoding="utf-8")


def _summary_from_dict(payload: dict) -> AspectSummary:
    return AspectSummary(
        term=payload["term"],
        n_sentences=payload["nSentences"],
        n_pos=payload["nPos"],
        n_neg=payload["nNeg"],
        rating=payload["rating"],
        children=tuple(_summary_from_dict(c) for c in payload.get("children", [])),
    )


def load_store(path: str | Path) -> SummaryStore:
    """Load a persisted store; SchemaError on malformed files."""
    from .aspects import AspectTerm, Category

    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: not valid JSON: {exc}") from exc
    try:
        h = payload["hierarchy"]
        categories = []
        for cat in h["categories"]:
            children = tuple(
                AspectTerm(term=name, source="direct", support=1)
                for name in cat["children"]
                if name != GENERAL_CHILD
            )
            categories.append(
                Category(
                    parent=AspectTerm(term=cat["parent"], source="direct", support=max(cat["support"], 1)),
                    children=children,
                    support=cat["support"],
                )
            )
        hierarchy = AspectHierarchy(
            product_type=h["productType"], categories=tuple(categories)
        )
        summaries = {
            p["productId"]: ProductSummary(
                product_id=p["productId"],
                title=p["title"],
                site_id=p["siteId"],
                categories=tuple(_summary_from_dict(c) for c in p["categories"]),
                total_sentences=p["totalSentences"],
            )
            for p in payload["products"]
        }
        sentences = {
            pid: {
                cat: {
                    child: [(item["text"], item["polarity"]) for item in items]
                    for child, items in per_cat.items()
                }
                for cat, per_cat in per_product.items()
            }
            for pid, per_product in payload["sentences"].items()
        }
        return SummaryStore(
            product_type=payload["productType"],
            hierarchy=hierarchy,
            summaries=summaries,
            sentences=sentences,
            version=payload["version"],
        )
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"{path}: malformed summary store: {exc}") from exc
