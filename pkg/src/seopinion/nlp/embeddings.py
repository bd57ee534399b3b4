"""Static word-vector table: load, lookup with OOV fallback, cosine."""

from __future__ import annotations

import re
import zlib
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ..errors import DimensionMismatch, ParseError, ValidationError, ZeroVector

_TERM_SPLIT_RE = re.compile(r"[^a-z0-9]+")


@dataclass(frozen=True)
class EmbeddingTable:
    """Immutable word → vector map, shareable across threads.

    `trigram_buckets`, when present, provides hashed character-trigram
    vectors used as an OOV fallback; the bundled table ships without them
    and OOV words embed to a zero vector.
    """

    dim: int
    vectors: dict[str, np.ndarray]
    trigram_buckets: dict[int, np.ndarray] | None = None
    n_buckets: int = 0

    def __contains__(self, word: str) -> bool:
        return word in self.vectors

    def is_oov(self, word: str) -> bool:
        """True when `embed` has no information at all for this word."""
        if word in self.vectors:
            return False
        if self.trigram_buckets:
            return not any(b in self.trigram_buckets for b in _trigram_bucket_ids(word, self.n_buckets))
        return True


def _trigram_bucket_ids(word: str, n_buckets: int) -> list[int]:
    padded = f"<{word}>"
    return [
        zlib.crc32(padded[i : i + 3].encode("utf-8")) % n_buckets
        for i in range(len(padded) - 2)
    ]


def load_embeddings(path: str | Path) -> EmbeddingTable:
    """Load a text vector file: one `word v1 v2 ... vd` line per word."""
    vectors: dict[str, np.ndarray] = {}
    dim: int | None = None
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            parts = line.split(" ")
            if len(parts) < 2:
                raise ParseError(f"{path}:{lineno}: expected 'word v1 ... vd'")
            word, values = parts[0], parts[1:]
            try:
                vec = np.array([float(v) for v in values], dtype=np.float64)
            except ValueError as exc:
                raise ParseError(f"{path}:{lineno}: non-numeric component") from exc
            if dim is None:
                dim = vec.shape[0]
            elif vec.shape[0] != dim:
                raise DimensionMismatch(
                    f"{path}:{lineno}: vector length {vec.shape[0]} != {dim}"
                )
            if not np.all(np.isfinite(vec)):
                raise ValidationError(f"{path}:{lineno}: NaN/Inf component")
            vec.setflags(write=False)
            vectors[word] = vec
    if dim is None:
        raise ParseError(f"{path}: empty embedding file")
    return EmbeddingTable(dim=dim, vectors=vectors)


def derive_trigram_buckets(table: EmbeddingTable, n_buckets: int) -> EmbeddingTable:
    """Return a copy of the table with trigram bucket vectors.

    Each bucket vector is the mean of the vectors of all in-vocabulary words
    containing a trigram hashing to that bucket, so near-miss spellings of
    known words embed near them.
    """
    sums: dict[int, np.ndarray] = {}
    counts: dict[int, int] = {}
    for word, vec in table.vectors.items():
        for b in set(_trigram_bucket_ids(word, n_buckets)):
            if b in sums:
                sums[b] += vec
                counts[b] += 1
            else:
                sums[b] = vec.copy()
                counts[b] = 1
    buckets = {b: s / counts[b] for b, s in sums.items()}
    for vec in buckets.values():
        vec.setflags(write=False)
    return EmbeddingTable(
        dim=table.dim, vectors=table.vectors, trigram_buckets=buckets, n_buckets=n_buckets
    )


def embed(table: EmbeddingTable, word: str) -> np.ndarray:
    """The word's vector; trigram-bucket mean if configured; else zeros (OOV)."""
    vec = table.vectors.get(word)
    if vec is not None:
        return vec
    if table.trigram_buckets:
        hits = [
            table.trigram_buckets[b]
            for b in _trigram_bucket_ids(word, table.n_buckets)
            if b in table.trigram_buckets
        ]
        if hits:
            return np.mean(hits, axis=0)
    return np.zeros(table.dim)


def term_vector(table: EmbeddingTable, term: str) -> np.ndarray:
    """Embed a possibly-multiword term as the mean of its in-vocab token vectors.

    Tokens are split on any non-alphanumeric character, so "battery-life"
    and "battery life" embed identically. Returns a zero vector when no
    token is in vocabulary.
    """
    words = [w for w in _TERM_SPLIT_RE.split(term.lower()) if w]
    in_vocab = [table.vectors[w] for w in words if w in table.vectors]
    if not in_vocab:
        return np.zeros(table.dim)
    return np.mean(in_vocab, axis=0)


def cosine(u: np.ndarray, v: np.ndarray) -> float:
    """Cosine similarity in [-1, 1]; strict about shape and zero vectors."""
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    if u.shape != v.shape:
        raise DimensionMismatch(f"shapes {u.shape} and {v.shape}")
    nu = float(np.linalg.norm(u))
    nv = float(np.linalg.norm(v))
    if nu == 0.0 or nv == 0.0:
        raise ZeroVector("cosine undefined for zero vector")
    return float(np.dot(u, v) / (nu * nv))


def safe_cosine(u: np.ndarray, v: np.ndarray) -> float:
    """Like `cosine` but 0.0 for zero vectors, which is how callers treat OOV."""
    try:
        return cosine(u, v)
    except ZeroVector:
        return 0.0
