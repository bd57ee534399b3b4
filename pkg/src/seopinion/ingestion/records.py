"""Product records: page extraction, corpus assembly and JSON persistence.

The corpus file is a JSON array; each element carries the two page-content
keys ("productDetails" with a Title string plus part name → array of strings,
and "customerReviews" as an array of strings) together with the bookkeeping
keys "siteId", "productType" and "tabularParts" that the pipeline needs.
Field order in the output is fixed so identical corpora serialize to
identical bytes.
"""

from __future__ import annotations

import hashlib
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import NoTitleError, SchemaError, UnknownSiteError
from .htmldom import parse_html
from .rules import SiteConfig, TITLE_PART
from .xpath import evaluate

logger = logging.getLogger(__name__)


def product_id_for(site_id: str, title: str) -> str:
    """Stable 64-bit content hash, lowercase hex; identical across runs."""
    digest = hashlib.blake2b(f"{site_id}\x00{title}".encode("utf-8"), digest_size=8)
    return digest.hexdigest()


@dataclass(frozen=True)
class ProductRecord:
    product_id: str
    site_id: str
    title: str
    detail_parts: dict[str, list[str]]
    reviews: list[str]
    tabular_parts: frozenset[str] = field(default_factory=frozenset)


@dataclass(frozen=True)
class Corpus:
    product_type: str
    records: list[ProductRecord]

    def __len__(self) -> int:
        return len(self.records)


def _normalize(text: str) -> str:
    return " ".join(text.split())


def extract_product(html: str, config: SiteConfig) -> ProductRecord:
    """Run every rule of `config` against one page.

    Matching text nodes are collected in document order, whitespace-
    normalized and dropped when empty. Only a missing title is an error;
    every other rule silently yields an empty list.
    """
    root = parse_html(html)

    def run(rule) -> list[str]:
        return [t for t in (_normalize(s) for s in evaluate(rule.compiled, root)) if t]

    title_matches = run(config.title_rule)
    if not title_matches:
        raise NoTitleError(f"site {config.site_id!r}: Title rule matched nothing")
    title = " ".join(title_matches)

    detail_parts: dict[str, list[str]] = {}
    for rule in config.detail_rules:
        if rule.part_name == TITLE_PART:
            continue
        detail_parts.setdefault(rule.part_name, []).extend(run(rule))

    return ProductRecord(
        product_id=product_id_for(config.site_id, title),
        site_id=config.site_id,
        title=title,
        detail_parts=detail_parts,
        reviews=run(config.review_rule),
        tabular_parts=config.tabular_parts(),
    )


def build_corpus(
    pages: list[tuple[str, str]],
    configs: dict[str, SiteConfig],
    product_type: str,
) -> Corpus:
    """Extract one record per page; titleless pages are logged and skipped.

    Pages arrive as (site_id, html) pairs. Records hashing to an already
    seen product_id are dropped, keeping the first occurrence.
    """
    records: list[ProductRecord] = []
    seen: set[str] = set()
    for site_id, html in pages:
        config = configs.get(site_id)
        if config is None:
            raise UnknownSiteError(f"no config for site {site_id!r}")
        try:
            record = extract_product(html, config)
        except NoTitleError:
            logger.warning("skipping page with no title (site %s)", site_id)
            continue
        if record.product_id in seen:
            logger.info("duplicate product %s (%s), keeping first", record.product_id, record.title)
            continue
        seen.add(record.product_id)
        records.append(record)
    return Corpus(product_type=product_type, records=records)


def _record_to_json(record: ProductRecord, product_type: str) -> dict:
    details: dict[str, object] = {TITLE_PART: record.title}
    details.update({part: list(strings) for part, strings in record.detail_parts.items()})
    return {
        "siteId": record.site_id,
        "productType": product_type,
        "tabularParts": sorted(record.tabular_parts),
        "productDetails": details,
        "customerReviews": list(record.reviews),
    }


def write_corpus(corpus: Corpus, path: str | Path) -> None:
    payload = [_record_to_json(r, corpus.product_type) for r in corpus.records]
    text = json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
    Path(path).write_text(text, encoding="utf-8")


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise SchemaError(message)


def read_corpus(path: str | Path) -> Corpus:
    """Read a corpus file; SchemaError on anything off-format.

    product_ids are recomputed from (siteId, Title); duplicates keep the
    first occurrence. An empty array reads as an empty corpus with an
    empty product type.
    """
    path = Path(path)
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: not valid JSON: {exc}") from exc
    _require(isinstance(payload, list), f"{path}: corpus must be a JSON array")

    records: list[ProductRecord] = []
    types: set[str] = set()
    seen: set[str] = set()
    for i, item in enumerate(payload):
        where = f"{path}[{i}]"
        _require(isinstance(item, dict), f"{where}: record must be an object")
        _require("productDetails" in item, f"{where}: missing 'productDetails'")
        _require("customerReviews" in item, f"{where}: missing 'customerReviews'")
        details = item["productDetails"]
        _require(isinstance(details, dict), f"{where}: 'productDetails' must be an object")
        title = details.get(TITLE_PART)
        _require(isinstance(title, str) and bool(title), f"{where}: missing Title string")
        reviews = item["customerReviews"]
        _require(
            isinstance(reviews, list) and all(isinstance(r, str) for r in reviews),
            f"{where}: 'customerReviews' must be an array of strings",
        )
        parts: dict[str, list[str]] = {}
        for part, strings in details.items():
            if part == TITLE_PART:
                continue
            _require(
                isinstance(strings, list) and all(isinstance(s, str) for s in strings),
                f"{where}: part {part!r} must be an array of strings",
            )
            parts[part] = list(strings)
        site_id = item.get("siteId", "")
        _require(isinstance(site_id, str), f"{where}: 'siteId' must be a string")
        tabular = item.get("tabularParts", [])
        _require(
            isinstance(tabular, list) and all(isinstance(t, str) for t in tabular),
            f"{where}: 'tabularParts' must be an array of strings",
        )
        types.add(item.get("productType", ""))

        record = ProductRecord(
            product_id=product_id_for(site_id, title),
            site_id=site_id,
            title=title,
            detail_parts=parts,
            reviews=list(reviews),
            tabular_parts=frozenset(tabular),
        )
        if record.product_id in seen:
            logger.info("duplicate product %s in %s, keeping first", record.product_id, path)
            continue
        seen.add(record.product_id)
        records.append(record)

    _require(len(types) <= 1, f"{path}: records disagree on productType: {sorted(types)}")
    product_type = next(iter(types), "")
    return Corpus(product_type=product_type, records=records)
