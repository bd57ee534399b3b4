"""Review-text normalization, sentence splitting and tokenization.

The cleanup pipeline is tuned for noisy customer-review text: URLs, emoticons,
slang, acronyms and contractions are rewritten to plain words so that the
downstream tagger and lexicon see a predictable surface form. Template text
(product descriptions) is clean enough that callers usually tokenize it
directly without `preprocess`.
"""

from __future__ import annotations

import re
from functools import lru_cache
from importlib import resources

_URL_RE = re.compile(r"(https?://\S+|www\.\S+)", re.IGNORECASE)
# standalone integers/decimals like "100", "3.5", "1,299"
_NUMBER_TOKEN_RE = re.compile(r"^\d+(?:[.,]\d+)*$")
_WS_RE = re.compile(r"\s+")
# punctuation runs are padded with spaces, except apostrophes inside words
# and . , between digits, which stay attached
_PUNCT_SPLIT_RE = re.compile(
    r"(?P<keep>(?<=\d)[.,](?=\d)|(?<=[A-Za-z])'(?=[A-Za-z]))|(?P<pad>[^\sA-Za-z0-9]+)"
)
_HYPHEN_RE = re.compile(r"(?<=[A-Za-z0-9])[-–—]+(?=[A-Za-z0-9])")

# curly quotes and dashes are mapped to ASCII before the non-ASCII strip so
# that "it’s" still reads as a contraction
_UNICODE_PUNCT = {
    "‘": "'", "’": "'", "“": '"', "”": '"',
    "–": "-", "—": "-", " ": " ",
}

_TOKEN_RE = re.compile(r"[A-Za-z0-9]+(?:'[A-Za-z0-9]+)*|[^\sA-Za-z0-9]+")


def _data_text(name: str) -> str:
    return (resources.files("seopinion.nlp") / "data" / name).read_text(encoding="utf-8")


def _load_map(name: str) -> dict[str, str]:
    out: dict[str, str] = {}
    for line in _data_text(name).splitlines():
        line = line.rstrip("\n")
        if not line or line.startswith("#"):
            continue
        key, _, value = line.partition("\t")
        out[key] = value
    return out


def _load_wordset(name: str) -> frozenset[str]:
    words = set()
    for line in _data_text(name).splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line.lower())
    return frozenset(words)


@lru_cache(maxsize=None)
def _emoticons() -> dict[str, str]:
    return _load_map("emoticons.tsv")


@lru_cache(maxsize=None)
def _word_rewrites() -> tuple[re.Pattern, dict[str, str]]:
    """Slang, acronym and contraction rewrites compiled into one pass."""
    mapping: dict[str, str] = {}
    for name in ("slang.tsv", "acronyms.tsv", "contractions.tsv"):
        for key, value in _load_map(name).items():
            mapping[key.lower()] = value
    keys = sorted(mapping, key=len, reverse=True)
    pattern = re.compile(
        r"(?<![A-Za-z0-9'])(" + "|".join(re.escape(k) for k in keys) + r")(?![A-Za-z0-9'])",
        re.IGNORECASE,
    )
    return pattern, mapping


@lru_cache(maxsize=None)
def stopwords() -> frozenset[str]:
    """The fixed stop-word list bundled with the package."""
    return _load_wordset("stopwords.txt")


@lru_cache(maxsize=None)
def _abbreviations() -> frozenset[str]:
    return _load_wordset("abbreviations.txt")


def preprocess(text: str) -> str:
    """Normalize raw review text to a lowercase, token-friendly form.

    The steps run in a fixed order: URL removal, non-ASCII removal (after
    smart-quote folding), emoticon/slang/acronym expansion, contraction
    rewriting, punctuation separation and standalone-number removal, then
    lowercasing. The result is idempotent under a second call. Stop words
    are NOT removed here; the tagger needs them.
    """
    for src, dst in _UNICODE_PUNCT.items():
        text = text.replace(src, dst)
    text = _URL_RE.sub(" ", text)
    text = text.encode("ascii", errors="ignore").decode("ascii")

    # separating punctuation first keeps the later token-level rewrites
    # stable under a second pass; runs like ":)" stay single tokens
    text = _HYPHEN_RE.sub(" ", text)
    text = _PUNCT_SPLIT_RE.sub(
        lambda m: m.group("keep") if m.group("keep") is not None else f" {m.group('pad')} ",
        text,
    )

    emo = _emoticons()
    text = " ".join(emo.get(tok, tok) for tok in text.split())

    pattern, mapping = _word_rewrites()
    text = pattern.sub(lambda m: mapping[m.group(1).lower()], text)

    kept = [tok for tok in text.split() if not _NUMBER_TOKEN_RE.match(tok)]
    return " ".join(kept).lower()


def split_sentences(text: str) -> list[str]:
    """Split text on .!? runs followed by whitespace or end of text.

    Terminal punctuation stays attached to its sentence. Periods after
    bundled abbreviations ("dr.", "e.g.") and single-letter initials do
    not end a sentence.
    """
    sentences: list[str] = []
    start = 0
    for match in re.finditer(r"[.!?]+(?=\s|$)", text):
        end = match.end()
        if match.group(0) == ".":
            before = text[start:match.start()].rstrip()
            last = before.rsplit(None, 1)[-1].lower() if before else ""
            last = last.strip("(\"'")
            if last in _abbreviations() or (len(last) == 1 and last.isalpha()):
                continue
        chunk = text[start:end].strip()
        if chunk:
            sentences.append(chunk)
        start = end
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return sentences


def tokenize(sentence: str) -> list[str]:
    """Split a sentence into word and punctuation tokens.

    Words keep internal apostrophes ("laptop's"); every punctuation run
    becomes its own token so the tagger can mark it OTHER.
    """
    return _TOKEN_RE.findall(sentence)
