#!/usr/bin/env python3
"""Derive the expected end-to-end output for the planted two-product corpus
by brute force, and freeze it as tests/fixtures/expected_planted.json.

This is the independent oracle for the pipeline: it reads the corpus and the
bundled data files with its own plain readers, recomputes every stage with
flat, unoptimized logic (regex chunking, full pairwise-similarity graph,
exhaustive cross-product mapping), and writes the trace the acceptance suite
compares the real pipeline against. Only the token-level primitives
(tokenize / split_sentences / pos_tag / light_lemma / preprocess) are shared
with the package; every algorithmic stage is reimplemented here.
"""

from __future__ import annotations

import hashlib
import json
import re
import sys
from itertools import combinations
from pathlib import Path

import numpy as np

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from seopinion.nlp import light_lemma, pos_tag, preprocess, split_sentences, tokenize  # noqa: E402

DATA = ROOT / "src" / "seopinion" / "nlp" / "data"
FIXTURES = ROOT / "tests" / "fixtures"

THETA_SEL = 0.55
THETA_CLU = 0.50
MIN_SUPPORT = 2
THETA_SUBJ = 0.1
THETA_MAP = 0.9   # planted corpus pins mapping to exact lemma matches
GENERAL = "General"


def load_vectors() -> dict[str, np.ndarray]:
    vectors = {}
    for line in (DATA / "embeddings_50d.txt").read_text().splitlines():
        parts = line.split(" ")
        vectors[parts[0]] = np.array([float(x) for x in parts[1:]])
    return vectors


def load_scores() -> dict[str, tuple[float, float]]:
    scores = {}
    for line in (DATA / "sentiment_lexicon.tsv").read_text().splitlines():
        if line and not line.startswith("#"):
            word, pos, neg = line.split("\t")
            scores[word] = (float(pos), float(neg))
    return scores


def load_stopwords() -> set[str]:
    out = set()
    for line in (DATA / "stopwords.txt").read_text().splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.add(line)
    return out


VEC = load_vectors()
SCORES = load_scores()
STOP = load_stopwords()


def term_vec(term: str) -> np.ndarray:
    words = [w for w in re.split(r"[^a-z0-9]+", term.lower()) if w]
    hits = [VEC[w] for w in words if w in VEC]
    return np.mean(hits, axis=0) if hits else np.zeros(50)


def cos(u: np.ndarray, v: np.ndarray) -> float:
    nu, nv = np.linalg.norm(u), np.linalg.norm(v)
    if nu == 0 or nv == 0:
        return 0.0
    return float(u @ v / (nu * nv))


def lemmas_and_tags(sentence: str, *, clean: bool) -> list[tuple[str, str]]:
    text = preprocess(sentence) if clean else sentence
    tagged = pos_tag(tokenize(text))
    return [(t.lemma, t.tag.value) for t in tagged.tokens]


def term_of(label: str) -> str:
    return " ".join(
        light_lemma(t) for t in tokenize(label) if any(c.isalnum() for c in t)
    )


def candidates_of(sentence: str) -> set[str]:
    toks = lemmas_and_tags(sentence, clean=False)
    tag_string = "".join({"NOUN": "N", "ADJ": "A"}.get(tag, "O")[0] for _, tag in toks)
    out = set()
    for m in re.finditer(r"A?N+", tag_string):
        run = list(range(m.start(), m.end()))
        if tag_string[run[0]] == "A" and len(run) == 1:
            continue
        if len(run) >= 2:
            chunk = run[-3:] if len(run) > 3 else run
            words = [toks[i][0] for i in chunk]
            if not any(w in STOP for w in words):
                out.add(" ".join(words))
    for lemma, tag in toks:
        if tag == "NOUN" and lemma not in STOP:
            out.add(lemma)
    return out


def main() -> None:
    corpus = json.loads((FIXTURES / "planted_corpus.json").read_text())

    # --- aspect collection with record-level support ---
    containing: dict[str, int] = {}
    direct_terms: set[str] = set()
    candidate_terms: set[str] = set()
    for record in corpus:
        details = record["productDetails"]
        tabular = set(record.get("tabularParts", []))
        d = {
            term_of(label)
            for part in tabular
            for label in details.get(part, [])
        }
        c = set()
        for part, strings in details.items():
            if part == "Title" or part in tabular:
                continue
            for text in strings:
                for sentence in split_sentences(text):
                    c |= candidates_of(sentence)
        direct_terms |= d
        candidate_terms |= c
        for t in d | c:
            containing[t] = containing.get(t, 0) + 1
    candidate_terms -= direct_terms

    popular = set(direct_terms)
    for cand in candidate_terms:
        v = term_vec(cand)
        if not np.any(v):
            if containing[cand] >= MIN_SUPPORT:
                popular.add(cand)
            continue
        best = max((cos(v, term_vec(d)) for d in direct_terms), default=0.0)
        if best >= THETA_SEL:
            popular.add(cand)

    # --- clustering as connected components of the pairwise graph ---
    terms = sorted(popular)
    adjacency = {t: set() for t in terms}
    for a, b in combinations(terms, 2):
        if cos(term_vec(a), term_vec(b)) > THETA_CLU:
            adjacency[a].add(b)
            adjacency[b].add(a)
    clusters: list[set[str]] = []
    unseen = set(terms)
    while unseen:
        seed = min(unseen)
        group = {seed}
        frontier = [seed]
        while frontier:
            node = frontier.pop()
            for nb in adjacency[node]:
                if nb not in group:
                    group.add(nb)
                    frontier.append(nb)
        unseen -= group
        clusters.append(group)

    # --- medoid parents, categories sorted by support ---
    categories = []
    for group in clusters:
        members = sorted(group)
        if len(members) == 1:
            parent = members[0]
        else:
            def mean_sim(m):
                return sum(cos(term_vec(m), term_vec(o)) for o in members if o != m) / (len(members) - 1)
            parent = min(members, key=lambda m: (-mean_sim(m), -containing[m], m))
        children = sorted(
            (m for m in members if m != parent), key=lambda m: (-containing[m], m)
        )
        categories.append({
            "parent": parent,
            "support": sum(containing[m] for m in members),
            "children": children + [GENERAL],
        })
    categories.sort(key=lambda c: (-c["support"], c["parent"]))

    # --- per-product subjectivity, mapping, polarity, roll-up ---
    products = []
    sentences_map: dict[str, dict] = {}
    for record in corpus:
        details = record["productDetails"]
        title = details["Title"]
        site = record["siteId"]
        pid = hashlib.blake2b(f"{site}\x00{title}".encode(), digest_size=8).hexdigest()

        opinions = []
        for review in record["customerReviews"]:
            for raw in split_sentences(review):
                toks = lemmas_and_tags(raw, clean=True)
                nouns_adjs = [(l, t) for l, t in toks if t in ("NOUN", "ADJ")]
                if not any(t == "NOUN" for _, t in nouns_adjs):
                    continue
                if not any(t == "ADJ" for _, t in nouns_adjs):
                    continue
                pos_sum = sum(SCORES.get(l, (0, 0))[0] for l, _ in nouns_adjs)
                neg_sum = sum(SCORES.get(l, (0, 0))[1] for l, _ in nouns_adjs)
                if max(pos_sum, neg_sum) / len(nouns_adjs) > THETA_SUBJ:
                    opinions.append((raw, toks))

        def matches(term: str, toks) -> bool:
            lem = [l for l, _ in toks]
            for n in (1, 2, 3):
                for i in range(len(lem) - n + 1):
                    if " ".join(lem[i : i + n]) == term:
                        return True
            tv = term_vec(term)
            if not np.any(tv):
                return False
            return any(
                cos(VEC.get(l, np.zeros(50)), tv) >= THETA_MAP
                for l, t in toks if t == "NOUN"
            )

        def polarity(toks) -> str:
            total = sum(
                SCORES.get(l, (0, 0))[0] - SCORES.get(l, (0, 0))[1]
                for l, t in toks if t in ("NOUN", "ADJ", "ADV", "VERB")
            )
            return "positive" if total >= 0 else "negative"

        mapped = []  # (category, child, text, polarity)
        for cat in categories:
            for raw, toks in opinions:
                if not matches(cat["parent"], toks):
                    continue
                hits = [c for c in cat["children"] if c != GENERAL and matches(c, toks)]
                for child in hits or [GENERAL]:
                    mapped.append((cat["parent"], child, raw, polarity(toks)))

        per_cat_child: dict[tuple[str, str], list[int]] = {}
        per_product_sentences: dict = {}
        for parent, child, text, pol in mapped:
            bucket = per_cat_child.setdefault((parent, child), [0, 0])
            bucket[0 if pol == "positive" else 1] += 1
            per_product_sentences.setdefault(parent, {}).setdefault(child, []).append(
                {"text": text, "polarity": pol}
            )

        cat_summaries = []
        for cat in categories:
            child_rows = []
            cp = cn = 0
            for child in cat["children"]:
                p, n = per_cat_child.get((cat["parent"], child), (0, 0))
                child_rows.append({
                    "term": child, "nSentences": p + n, "nPos": p, "nNeg": n,
                    "rating": (5 * p + n) / (p + n) if p + n else None,
                })
                cp += p
                cn += n
            child_rows.sort(key=lambda r: (-r["nSentences"], r["term"]))
            total = cp + cn
            cat_summaries.append({
                "term": cat["parent"], "nSentences": total, "nPos": cp, "nNeg": cn,
                "rating": (5 * cp + cn) / total if total else None,
                "children": child_rows,
            })
        cat_summaries.sort(key=lambda r: (-r["nSentences"], r["term"]))
        products.append({
            "productId": pid,
            "title": title,
            "siteId": site,
            "totalSentences": sum(c["nSentences"] for c in cat_summaries),
            "categories": cat_summaries,
        })
        sentences_map[pid] = per_product_sentences

    expected = {
        "config": {
            "thetaSel": THETA_SEL, "thetaClu": THETA_CLU, "minSupport": MIN_SUPPORT,
            "thetaSubj": THETA_SUBJ, "thetaMap": THETA_MAP,
        },
        "productType": corpus[0]["productType"],
        "hierarchy": {
            "productType": corpus[0]["productType"],
            "categories": categories,
        },
        "products": products,
        "sentences": sentences_map,
    }
    out = FIXTURES / "expected_planted.json"
    out.write_text(json.dumps(expected, indent=2, ensure_ascii=False) + "\n")
    print(f"wrote {out}")
    for cat in categories:
        print("  category:", cat["parent"], cat["children"], "support", cat["support"])
    for p in products:
        print(f"  {p['title']}: total {p['totalSentences']}",
              [(c['term'], c['nSentences'], c['rating']) for c in p['categories']])


if __name__ == "__main__":
    main()
