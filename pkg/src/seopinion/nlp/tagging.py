"""Part-of-speech tagging with a five-class tag set.

The tag set is deliberately coarse (NOUN, ADJ, VERB, ADV, OTHER) because the
aspect-extraction and opinion rules only ever consult nouns and adjectives.
An external tagger can be plugged in as a callable returning Penn tags; the
built-in baseline is deterministic and needs no model files.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Callable, Container, Sequence


class Tag(enum.Enum):
    NOUN = "NOUN"
    ADJ = "ADJ"
    VERB = "VERB"
    ADV = "ADV"
    OTHER = "OTHER"


@dataclass(frozen=True)
class Token:
    surface: str
    lemma: str
    tag: Tag

    def __post_init__(self) -> None:
        if not self.surface:
            raise ValueError("token surface must be nonempty")


@dataclass(frozen=True)
class TaggedSentence:
    """A tokenized sentence; `text` is the space-joined token surface form."""

    text: str
    tokens: tuple[Token, ...]

    def has_tag(self, tag: Tag) -> bool:
        return any(t.tag is tag for t in self.tokens)

    def lemmas(self) -> list[str]:
        return [t.lemma for t in self.tokens]


# External taggers return one Penn-style tag string per input token.
ExternalTagger = Callable[[Sequence[str]], Sequence[str]]

_PENN_PREFIXES = (("NN", Tag.NOUN), ("JJ", Tag.ADJ), ("VB", Tag.VERB), ("RB", Tag.ADV))


def penn_to_tag(penn: str) -> Tag:
    """Collapse a Penn Treebank tag (NN, NNS, JJR, VBD, ...) to the 5-class set."""
    for prefix, tag in _PENN_PREFIXES:
        if penn.startswith(prefix):
            return tag
    return Tag.OTHER


# determiners, pronouns, prepositions, conjunctions and other function words
_CLOSED_OTHER = frozenset("""
    the a an this that these those each every some any no all both either neither such
    i you he she it we they me him us them my your his her its our their
    mine yours hers ours theirs myself yourself himself herself itself ourselves themselves
    who whom whose which what when where why how
    of in on at by for with about against between among into through during before after
    above below to from up down out off over under again further then once here there
    and but or nor so yet because although though while if unless until since as whether
    not nt only own same than that's per via
    one two three four five six seven eight nine ten hundred thousand million
""".split())

_CLOSED_VERB = frozenset("""
    am is are was were be been being do does did done doing
    have has had having will would can could shall should may might must
""".split())

_NOUN_SUFFIXES = ("ness", "tion")
_ADJ_SUFFIXES = ("ful", "ous", "ive", "able")

# words a naive -s strip would corrupt
_PLURAL_EXCEPTIONS = frozenset("""
    as is us was has his hers its ours yours theirs this thus plus gas bias canvas
    alas yes always perhaps besides lens series species news
""".split())

_IRREGULAR_LEMMAS = {
    "children": "child", "men": "man", "women": "woman", "feet": "foot",
    "teeth": "tooth", "mice": "mouse", "geese": "goose", "people": "people",
}


@lru_cache(maxsize=None)
def _tag_lexicon() -> dict[str, Tag]:
    text = (resources.files("seopinion.nlp") / "data" / "tag_lexicon.tsv").read_text("utf-8")
    lexicon: dict[str, Tag] = {}
    for line in text.splitlines():
        if not line or line.startswith("#"):
            continue
        word, _, tag = line.partition("\t")
        lexicon[word] = Tag[tag]
    return lexicon


def _strip_inflection(word: str, suffix: str, known: Container[str]) -> str | None:
    stem = word[: -len(suffix)]
    if len(stem) < 4:
        return None
    if stem in known:
        return stem
    if stem + "e" in known:
        return stem + "e"
    if len(stem) >= 2 and stem[-1] == stem[-2] and stem[:-1] in known:
        return stem[:-1]
    return None


def light_lemma(word: str, known: Container[str] | None = None) -> str:
    """Lowercase and lightly strip inflection (-'s, plural -s/-es, -ing/-ed).

    Stripping is conservative: -ing/-ed come off only when the stem (or the
    stem plus restored -e / undoubled consonant) is a known word, and plural
    stripping skips -ss/-us/-is/-ies endings and a bundled exception list.
    Consistency matters more than linguistic correctness here: aspect terms
    and sentence tokens pass through this same function.
    """
    w = word.lower()
    if known is None:
        known = _tag_lexicon()
    if w in _IRREGULAR_LEMMAS:
        return _IRREGULAR_LEMMAS[w]
    if w.endswith("'s"):
        w = w[:-2]
    elif "'" in w:
        return w
    for suffix in ("ing", "ed"):
        if w.endswith(suffix) and w not in known:
            stripped = _strip_inflection(w, suffix, known)
            if stripped is not None:
                return stripped
    if len(w) < 4 or w in _PLURAL_EXCEPTIONS:
        return w
    if w.endswith(("ss", "us", "is", "ies")):
        return w
    if w.endswith(("xes", "ches", "shes", "sses")):
        return w[:-2]
    if w.endswith("s"):
        return w[:-1]
    return w


def _baseline_tag(word: str) -> Tag:
    if not any(c.isalnum() for c in word):
        return Tag.OTHER
    if any(c.isdigit() for c in word):
        return Tag.OTHER
    wl = word.lower()
    if wl in _CLOSED_OTHER:
        return Tag.OTHER
    if wl in _CLOSED_VERB:
        return Tag.VERB
    lexicon = _tag_lexicon()
    tag = lexicon.get(wl) or lexicon.get(light_lemma(wl))
    if tag is not None:
        return tag
    if wl.endswith(_NOUN_SUFFIXES):
        return Tag.NOUN
    if wl.endswith(_ADJ_SUFFIXES):
        return Tag.ADJ
    if wl.endswith("ly"):
        return Tag.ADV
    return Tag.NOUN


def pos_tag(tokens: Sequence[str], external: ExternalTagger | None = None) -> TaggedSentence:
    """Tag a token sequence; deterministic, total, one tag per token.

    With `external` set, its Penn tags are mapped down to the 5-class set;
    otherwise the baseline (closed-class lists, bundled tag lexicon, suffix
    rules, default NOUN) is used.
    """
    if external is not None:
        penn = external(tokens)
        tags = [penn_to_tag(p) for p in penn]
    else:
        tags = [_baseline_tag(t) for t in tokens]
    toks = tuple(
        Token(surface=s, lemma=light_lemma(s), tag=tag) for s, tag in zip(tokens, tags)
    )
    return TaggedSentence(text=" ".join(tokens), tokens=toks)
