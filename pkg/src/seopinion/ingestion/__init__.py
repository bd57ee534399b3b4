"""Template ingestion: site rule configs, page extraction, corpus files."""

from .htmldom import Element, parse_html
from .records import (
    Corpus,
    ProductRecord,
    build_corpus,
    extract_product,
    product_id_for,
    read_corpus,
    write_corpus,
)
from .rules import TITLE_PART, SiteConfig, XPathRule, load_config_dir, load_site_config
from .xpath import XPathExpr, evaluate, parse_xpath

__all__ = [
    "Corpus",
    "Element",
    "ProductRecord",
    "SiteConfig",
    "TITLE_PART",
    "XPathExpr",
    "XPathRule",
    "build_corpus",
    "evaluate",
    "extract_product",
    "load_config_dir",
    "load_site_config",
    "parse_html",
    "parse_xpath",
    "product_id_for",
    "read_corpus",
    "write_corpus",
]
