"""Phase A: mine popular aspects from product templates and build the
two-level hierarchy.

Direct aspects come from tabular detail parts (specification keys); candidate
aspects are nouns and short noun phrases chunked out of free-text parts.
Candidates survive only when embedding-similar to some direct aspect, then
everything is clustered by average pairwise similarity and each cluster's
medoid becomes the category parent.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import EmptyAspectSet
from .ingestion import Corpus, ProductRecord
from .nlp import (
    EmbeddingTable,
    Tag,
    light_lemma,
    pos_tag,
    safe_cosine,
    split_sentences,
    stopwords,
    term_vector,
    tokenize,
)

logger = logging.getLogger(__name__)

GENERAL_CHILD = "General"

MAX_CHUNK_TOKENS = 3


@dataclass(frozen=True)
class AspectTerm:
    term: str                 # lemmatized, lowercase, possibly multiword
    source: str               # "direct" | "candidate"
    support: int              # number of records containing the term

    def __post_init__(self) -> None:
        if not self.term:
            raise ValueError("aspect term must be nonempty")
        if self.support < 1:
            raise ValueError("aspect support must be >= 1")


@dataclass
class AspectCluster:
    """A group of aspects; `parent` is elected by build_hierarchy."""

    members: tuple[AspectTerm, ...]
    parent: AspectTerm | None = None


@dataclass(frozen=True)
class Category:
    parent: AspectTerm
    children: tuple[AspectTerm, ...]
    support: int

    def child_names(self) -> list[str]:
        """Child terms plus the synthetic General slot, display order."""
        return [c.term for c in self.children] + [GENERAL_CHILD]


@dataclass(frozen=True)
class AspectHierarchy:
    product_type: str
    categories: tuple[Category, ...]

    def category_for(self, parent_term: str) -> Category | None:
        for cat in self.categories:
            if cat.parent.term == parent_term:
                return cat
        return None

    def all_terms(self) -> list[str]:
        terms: list[str] = []
        for cat in self.categories:
            terms.append(cat.parent.term)
            terms.extend(c.term for c in cat.children)
        return terms


def _term_of(label: str) -> str:
    """Lemmatize a label's word tokens into a space-joined lowercase term."""
    words = [light_lemma(t) for t in tokenize(label) if any(c.isalnum() for c in t)]
    return " ".join(words)


def extract_direct_aspects(record: ProductRecord) -> set[AspectTerm]:
    """Aspect terms read off the record's tabular detail parts.

    Each string of a tabular part is a specification key ("Screen Size")
    and becomes one lemmatized term; non-tabular parts contribute nothing.
    """
    terms: set[str] = set()
    for part in record.tabular_parts:
        for label in record.detail_parts.get(part, []):
            term = _term_of(label)
            if term:
                terms.add(term)
    return {AspectTerm(term=t, source="direct", support=1) for t in terms}


def _chunk_candidates(tagged_tokens: Sequence) -> set[str]:
    """Single nouns plus maximal (ADJ)? NOUN+ chunks of 2..3 tokens."""
    stop = stopwords()
    out: set[str] = set()
    n = len(tagged_tokens)
    i = 0
    while i < n:
        tok = tagged_tokens[i]
        if tok.tag is Tag.NOUN or (tok.tag is Tag.ADJ and i + 1 < n and tagged_tokens[i + 1].tag is Tag.NOUN):
            run = [tok]
            j = i + 1
            while j < n and tagged_tokens[j].tag is Tag.NOUN:
                run.append(tagged_tokens[j])
                j += 1
            if len(run) >= 2:
                chunk = run[-MAX_CHUNK_TOKENS:] if len(run) > MAX_CHUNK_TOKENS else run
                if not any(t.lemma in stop for t in chunk):
                    out.add(" ".join(t.lemma for t in chunk))
            i = j
        else:
            i += 1
    for tok in tagged_tokens:
        if tok.tag is Tag.NOUN and tok.lemma not in stop:
            out.add(tok.lemma)
    return out


def extract_candidate_aspects(record: ProductRecord) -> set[AspectTerm]:
    """Noun and noun-phrase candidates from the free-text detail parts."""
    terms: set[str] = set()
    for part, strings in record.detail_parts.items():
        if part in record.tabular_parts:
            continue
        for text in strings:
            for sentence in split_sentences(text):
                tagged = pos_tag(tokenize(sentence))
                terms.update(_chunk_candidates(tagged.tokens))
    return {AspectTerm(term=t, source="candidate", support=1) for t in terms}


def collect_aspects(corpus: Corpus) -> tuple[list[AspectTerm], list[AspectTerm]]:
    """Aggregate per-record direct/candidate sets with record-level support.

    A term seen both directly and as a candidate counts records from either
    role and keeps source "direct".
    """
    containing: dict[str, int] = {}
    direct_terms: set[str] = set()
    candidate_terms: set[str] = set()
    for record in corpus.records:
        direct = {a.term for a in extract_direct_aspects(record)}
        candidates = {a.term for a in extract_candidate_aspects(record)}
        direct_terms |= direct
        candidate_terms |= candidates
        for term in direct | candidates:
            containing[term] = containing.get(term, 0) + 1
    ad = [AspectTerm(t, "direct", containing[t]) for t in sorted(direct_terms)]
    ac = [
        AspectTerm(t, "candidate", containing[t])
        for t in sorted(candidate_terms - direct_terms)
    ]
    return ad, ac


def select_popular_aspects(
    ad: Iterable[AspectTerm],
    ac: Iterable[AspectTerm],
    table: EmbeddingTable,
    theta_sel: float = 0.55,
    min_support: int = 2,
) -> list[AspectTerm]:
    """Direct aspects plus the candidates similar enough to one of them.

    A candidate with no in-vocabulary token cannot be compared, so it is
    kept purely on support. With no direct aspects at all, every candidate
    falls back to the support rule.
    """
    ad, ac = list(ad), list(ac)
    if not ad and not ac:
        raise EmptyAspectSet("no aspects to select from")
    direct_vecs = [v for v in (term_vector(table, d.term) for d in ad) if np.any(v)]
    selected: list[AspectTerm] = list(ad)
    for cand in ac:
        vec = term_vector(table, cand.term)
        if not np.any(vec) or not ad:
            if cand.support >= min_support:
                selected.append(cand)
            continue
        best = max((safe_cosine(vec, dv) for dv in direct_vecs), default=0.0)
        if best >= theta_sel:
            selected.append(cand)
    if not selected:
        raise EmptyAspectSet("aspect selection produced an empty set")
    return sorted(selected, key=lambda a: a.term)


def cluster_sim(aspect: AspectTerm, cluster: AspectCluster, table: EmbeddingTable) -> float:
    """Mean cosine between the aspect and every cluster member (OOV pairs 0)."""
    vec = term_vector(table, aspect.term)
    sims = [safe_cosine(vec, term_vector(table, m.term)) for m in cluster.members]
    return float(sum(sims) / len(sims))


def cluster_aspects(
    aspects: Sequence[AspectTerm],
    table: EmbeddingTable,
    theta_clu: float = 0.50,
) -> list[AspectCluster]:
    """Group aspects whose average similarity exceeds `theta_clu`.

    Every aspect seeds a singleton cluster; aspects are then visited in
    lexicographic order and joined to each existing cluster whose mean
    similarity to the current members is above the threshold. Clusters
    sharing any member are finally unioned, so the result is a partition.
    """
    if not aspects:
        raise EmptyAspectSet("cannot cluster an empty aspect set")
    ordered = sorted(aspects, key=lambda a: a.term)
    vectors = {a.term: term_vector(table, a.term) for a in ordered}
    clusters: list[set[str]] = [{a.term} for a in ordered]

    for aspect in ordered:
        vec = vectors[aspect.term]
        for members in clusters:
            if aspect.term in members:
                continue
            sims = [safe_cosine(vec, vectors[m]) for m in members]
            if sum(sims) / len(sims) > theta_clu:
                members.add(aspect.term)

    # transitive closure: any clusters sharing a member collapse into one
    parent = list(range(len(clusters)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    owner: dict[str, int] = {}
    for idx, members in enumerate(clusters):
        for term in members:
            if term in owner:
                ri, rj = find(owner[term]), find(idx)
                if ri != rj:
                    parent[rj] = ri
            else:
                owner[term] = idx

    merged: dict[int, set[str]] = {}
    for idx, members in enumerate(clusters):
        merged.setdefault(find(idx), set()).update(members)

    by_term = {a.term: a for a in ordered}
    result = [
        AspectCluster(members=tuple(sorted((by_term[t] for t in group), key=lambda a: a.term)))
        for group in merged.values()
    ]
    return sorted(result, key=lambda c: c.members[0].term)


def _medoid(members: Sequence[AspectTerm], table: EmbeddingTable) -> AspectTerm:
    """Member with maximal mean similarity to the others; ties prefer higher
    support, then the lexicographically smaller term."""
    if len(members) == 1:
        return members[0]
    vectors = {m.term: term_vector(table, m.term) for m in members}
    best: tuple[float, int, str] | None = None
    best_member = members[0]
    for m in members:
        sims = [
            safe_cosine(vectors[m.term], vectors[o.term]) for o in members if o.term != m.term
        ]
        mean = sum(sims) / len(sims)
        key = (-mean, -m.support, m.term)
        if best is None or key < best:
            best = key
            best_member = m
    return best_member


def build_hierarchy(
    clusters: Sequence[AspectCluster],
    product_type: str,
    table: EmbeddingTable,
) -> AspectHierarchy:
    """Elect each cluster's medoid as parent; the rest become its children.

    Children are ordered by descending support then term; categories by
    descending total support then parent term. Every category implicitly
    carries a General child (see Category.child_names).
    """
    categories: list[Category] = []
    for cluster in clusters:
        parent = _medoid(cluster.members, table)
        cluster.parent = parent
        children = sorted(
            (m for m in cluster.members if m.term != parent.term),
            key=lambda a: (-a.support, a.term),
        )
        categories.append(
            Category(
                parent=parent,
                children=tuple(children),
                support=sum(m.support for m in cluster.members),
            )
        )
    categories.sort(key=lambda c: (-c.support, c.parent.term))
    return AspectHierarchy(product_type=product_type, categories=tuple(categories))


def extract_hierarchy(
    corpus: Corpus,
    table: EmbeddingTable,
    theta_sel: float = 0.55,
    theta_clu: float = 0.50,
    min_support: int = 2,
) -> AspectHierarchy:
    """The whole Phase A: corpus details in, two-level hierarchy out."""
    ad, ac = collect_aspects(corpus)
    popular = select_popular_aspects(ad, ac, table, theta_sel, min_support)
    logger.info("selected %d popular aspects (%d direct, %d candidate)",
                len(popular), len(ad), len(popular) - len(ad))
    clusters = cluster_aspects(popular, table, theta_clu)
    return build_hierarchy(clusters, corpus.product_type, table)


def hierarchy_to_dict(hierarchy: AspectHierarchy) -> dict:
    """JSON-ready form; children include the synthetic General slot."""
    return {
        "productType": hierarchy.product_type,
        "categories": [
            {
                "parent": cat.parent.term,
                "support": cat.support,
                "children": cat.child_names(),
            }
            for cat in hierarchy.categories
        ],
    }
