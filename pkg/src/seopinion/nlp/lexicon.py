"""Sentiment lexicon: lemma → (positive, negative) scores in [0, 1]."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from types import MappingProxyType
from typing import Mapping

from ..errors import ParseError, ValidationError


@dataclass(frozen=True)
class SentimentLexicon:
    """Immutable lookup table; absent lemmas score (0, 0)."""

    entries: Mapping[str, tuple[float, float]]

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, lemma: str) -> bool:
        return lemma in self.entries


def load_lexicon(path: str | Path) -> SentimentLexicon:
    """Load a tab-separated `lemma<TAB>pos<TAB>neg` file.

    Raises ParseError on malformed lines and ValidationError when a score
    falls outside [0, 1].
    """
    entries: dict[str, tuple[float, float]] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise ParseError(f"{path}:{lineno}: expected 'lemma<TAB>pos<TAB>neg'")
            lemma, pos_s, neg_s = parts
            try:
                pos, neg = float(pos_s), float(neg_s)
            except ValueError as exc:
                raise ParseError(f"{path}:{lineno}: non-numeric score") from exc
            if not (0.0 <= pos <= 1.0 and 0.0 <= neg <= 1.0):
                raise ValidationError(
                    f"{path}:{lineno}: scores must lie in [0, 1], got ({pos}, {neg})"
                )
            entries[lemma] = (pos, neg)
    return SentimentLexicon(entries=MappingProxyType(entries))


def lexicon_score(lexicon: SentimentLexicon, lemma: str) -> tuple[float, float]:
    """(pos, neg) for the lemma, or (0.0, 0.0) when absent. Pure lookup."""
    return lexicon.entries.get(lemma, (0.0, 0.0))
