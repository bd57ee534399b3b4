"""Site rule configs: which XPath pulls which useful-data part of a page.

Config file format (one file per site, plain text, '#' comments):

    site: amazon

    rule:
      part: Title
      kind: detail
      xpath: //span[@id='productTitle']/text()

    rule:
      part: Product information
      kind: detail
      tabular: true
      xpath: //table[@id='spec-table']/tr/th/text()

    rule:
      part: Customer Reviews
      kind: review
      xpath: //div[@data-hook='review-collapsed']/span/text()

Several rules may share a part name; their matches are concatenated.
`tabular: true` marks a detail part whose strings are table attribute
names (specification keys); those become direct aspects downstream.
Exactly one detail rule must have part `Title`, and exactly one rule must
have kind `review`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from ..errors import ParseError, ValidationError
from .xpath import XPathExpr, parse_xpath

TITLE_PART = "Title"


@dataclass(frozen=True)
class XPathRule:
    part_name: str
    xpath: str
    kind: str  # "detail" | "review"
    tabular: bool = False
    compiled: XPathExpr = field(compare=False, repr=False, default=None)  # type: ignore[assignment]


@dataclass(frozen=True)
class SiteConfig:
    site_id: str
    detail_rules: tuple[XPathRule, ...]
    review_rule: XPathRule

    @property
    def title_rule(self) -> XPathRule:
        return next(r for r in self.detail_rules if r.part_name == TITLE_PART)

    def tabular_parts(self) -> frozenset[str]:
        return frozenset(r.part_name for r in self.detail_rules if r.tabular)


_BOOL_VALUES = {"true": True, "yes": True, "1": True, "false": False, "no": False, "0": False}


def _parse_blocks(path: Path, text: str) -> tuple[str, list[dict[str, str]]]:
    site_id: str | None = None
    blocks: list[dict[str, str]] = []
    current: dict[str, str] | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line == "rule:":
            current = {}
            blocks.append(current)
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise ParseError(f"{path}:{lineno}: expected 'key: value', got {line!r}")
        key, value = key.strip(), value.strip()
        if key == "site":
            if current is not None:
                raise ParseError(f"{path}:{lineno}: 'site' must come before rules")
            site_id = value
        elif key in ("part", "kind", "xpath", "tabular"):
            if current is None:
                raise ParseError(f"{path}:{lineno}: {key!r} outside a rule block")
            if key in current:
                raise ParseError(f"{path}:{lineno}: duplicate {key!r} in rule")
            current[key] = value
        else:
            raise ParseError(f"{path}:{lineno}: unknown key {key!r}")
    if not site_id:
        raise ParseError(f"{path}: missing 'site:' header")
    return site_id, blocks


def load_site_config(path: str | Path) -> SiteConfig:
    """Parse and validate one site's rule file.

    ParseError for malformed files, ValidationError for semantic problems
    (no Title rule, no detail rules, bad XPath, several review rules).
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    site_id, blocks = _parse_blocks(path, text)

    details: list[XPathRule] = []
    reviews: list[XPathRule] = []
    for i, block in enumerate(blocks, start=1):
        for required in ("part", "kind", "xpath"):
            if required not in block:
                raise ParseError(f"{path}: rule #{i} is missing {required!r}")
        if not block["part"]:
            raise ValidationError(f"{path}: rule #{i} has an empty part name")
        kind = block["kind"]
        if kind not in ("detail", "review"):
            raise ValidationError(f"{path}: rule #{i} kind must be detail or review")
        tabular_raw = block.get("tabular", "false").lower()
        if tabular_raw not in _BOOL_VALUES:
            raise ValidationError(f"{path}: rule #{i} tabular must be true/false")
        rule = XPathRule(
            part_name=block["part"],
            xpath=block["xpath"],
            kind=kind,
            tabular=_BOOL_VALUES[tabular_raw],
            compiled=parse_xpath(block["xpath"]),
        )
        (details if kind == "detail" else reviews).append(rule)

    if not details:
        raise ValidationError(f"{path}: config has no detail rules")
    titles = [r for r in details if r.part_name == TITLE_PART]
    if len(titles) != 1:
        raise ValidationError(f"{path}: expected exactly one Title rule, found {len(titles)}")
    if len(reviews) != 1:
        raise ValidationError(f"{path}: expected exactly one review rule, found {len(reviews)}")
    return SiteConfig(site_id=site_id, detail_rules=tuple(details), review_rule=reviews[0])


def load_config_dir(directory: str | Path) -> dict[str, SiteConfig]:
    """Load every *.rules file in a directory, keyed by site_id."""
    configs: dict[str, SiteConfig] = {}
    for rules_path in sorted(Path(directory).glob("*.rules")):
        config = load_site_config(rules_path)
        if config.site_id in configs:
            raise ValidationError(f"duplicate site_id {config.site_id!r} in {rules_path}")
        configs[config.site_id] = config
    return configs
