"""Shared text machinery: preprocessing, tagging, sentiment lexicon, embeddings."""

from importlib import resources
from pathlib import Path

from .embeddings import (
    EmbeddingTable,
    cosine,
    derive_trigram_buckets,
    embed,
    load_embeddings,
    safe_cosine,
    term_vector,
)
from .lexicon import SentimentLexicon, lexicon_score, load_lexicon
from .preprocess import preprocess, split_sentences, stopwords, tokenize
from .tagging import (
    ExternalTagger,
    Tag,
    TaggedSentence,
    Token,
    light_lemma,
    penn_to_tag,
    pos_tag,
)

_DATA = resources.files("seopinion.nlp") / "data"


def bundled_lexicon_path() -> Path:
    return Path(str(_DATA / "sentiment_lexicon.tsv"))


def bundled_embeddings_path() -> Path:
    return Path(str(_DATA / "embeddings_50d.txt"))


def load_bundled_lexicon() -> SentimentLexicon:
    return load_lexicon(bundled_lexicon_path())


def load_bundled_embeddings() -> EmbeddingTable:
    return load_embeddings(bundled_embeddings_path())


__all__ = [
    "EmbeddingTable",
    "ExternalTagger",
    "SentimentLexicon",
    "Tag",
    "TaggedSentence",
    "Token",
    "bundled_embeddings_path",
    "bundled_lexicon_path",
    "cosine",
    "derive_trigram_buckets",
    "embed",
    "lexicon_score",
    "light_lemma",
    "load_bundled_embeddings",
    "load_bundled_lexicon",
    "load_embeddings",
    "load_lexicon",
    "penn_to_tag",
    "pos_tag",
    "preprocess",
    "safe_cosine",
    "split_sentences",
    "stopwords",
    "term_vector",
    "tokenize",
]
