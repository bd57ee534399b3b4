import json

import pytest

from seopinion.errors import (
    NoTitleError,
    ParseError,
    SchemaError,
    UnknownSiteError,
    ValidationError,
)
from seopinion.ingestion import (
    build_corpus,
    extract_product,
    load_site_config,
    read_corpus,
    write_corpus,
)

HP14_TITLE = (
    "2020 HP 14-inch HD Touchscreen Premium Laptop PC, AMD Ryzen 3 3200U Processor, "
    "8GB DDR4 Memory, 256GB SSD, Bluetooth, Windows 10, Silver"
)
HP14_REVIEWS = [
    "Very nice laptop. Arrived quickly and in perfect condition!",
    "Very happy with the laptop.",
    "It is lightweight, has a beautiful and vibrantly colored screen, an easy to use "
    "keyboard (I work online 15 hours a day, so it can't be too stiff or too difficult "
    "to hit the keys), and it is fast. It also literally boots in about 5 seconds and "
    "is very quiet due to the SSD drive.",
    "No complaints at all, and well worth the money spent on it.",
]


class TestSiteConfig:
    def test_amazon_rules_load(self, amazon_config):
        assert amazon_config.site_id == "amazon"
        assert len(amazon_config.detail_rules) == 7
        assert amazon_config.review_rule.kind == "review"
        assert amazon_config.title_rule.xpath == "//span[@id='productTitle']/text()"
        assert amazon_config.tabular_parts() == {
            "Compare with similar items",
            "Product information",
        }

    def test_no_detail_rules_rejected(self, tmp_path):
        path = tmp_path / "empty.rules"
        path.write_text(
            "site: x\n\nrule:\n  part: R\n  kind: review\n  xpath: //div/text()\n"
        )
        with pytest.raises(ValidationError):
            load_site_config(path)

    def test_missing_title_rule_rejected(self, tmp_path):
        path = tmp_path / "notitle.rules"
        path.write_text(
            "site: x\n\n"
            "rule:\n  part: Specs\n  kind: detail\n  xpath: //th/text()\n\n"
            "rule:\n  part: R\n  kind: review\n  xpath: //div/text()\n"
        )
        with pytest.raises(ValidationError):
            load_site_config(path)

    def test_unterminated_xpath_is_parse_error(self, tmp_path):
        path = tmp_path / "bad.rules"
        path.write_text(
            "site: x\n\n"
            "rule:\n  part: Title\n  kind: detail\n  xpath: //div[@class=\n\n"
            "rule:\n  part: R\n  kind: review\n  xpath: //div/text()\n"
        )
        with pytest.raises(ParseError):
            load_site_config(path)

    def test_unknown_key_is_parse_error(self, tmp_path):
        path = tmp_path / "bad.rules"
        path.write_text("site: x\n\nrule:\n  shape: round\n")
        with pytest.raises(ParseError):
            load_site_config(path)

    def test_shipped_configs_all_load(self):
        from pathlib import Path

        from seopinion.ingestion import load_config_dir

        configs = load_config_dir(Path(__file__).parents[1] / "configs")
        assert set(configs) == {"amazon", "flipkart", "ebay", "walmart", "bestbuy"}
        for config in configs.values():
            assert any(r.tabular for r in config.detail_rules)
            assert config.review_rule.kind == "review"


class TestExtractProduct:
    def test_golden_title_and_reviews(self, hp14_html, amazon_config):
        record = extract_product(hp14_html, amazon_config)
        assert record.title == HP14_TITLE
        assert record.reviews == HP14_REVIEWS

    def test_golden_detail_parts(self, hp14_html, amazon_config):
        record = extract_product(hp14_html, amazon_config)
        assert record.detail_parts["Product information"] == [
            "Screen Size",
            "Screen Resolution",
            "Hard Drive Interface",
            "Power Source",
            "Batteries",
        ]
        assert record.detail_parts["Compare with similar items"][:2] == [
            "Customer Rating",
            "Price",
        ]

    def test_deterministic(self, hp14_html, amazon_config):
        a = extract_product(hp14_html, amazon_config)
        b = extract_product(hp14_html, amazon_config)
        assert a == b

    def test_no_title_raises(self, amazon_config, fixtures_dir):
        html = (fixtures_dir / "pages" / "amazon" / "notaproduct.html").read_text()
        with pytest.raises(NoTitleError):
            extract_product(html, amazon_config)

    def test_no_review_matches_yields_empty_list(self, amazon_config):
        html = "<html><body><span id='productTitle'>Thing</span></body></html>"
        record = extract_product(html, amazon_config)
        assert record.reviews == []
        # non-matching detail rules yield empty lists, never errors
        assert record.detail_parts["About this item"] == []


class TestBuildCorpus:
    def _pages(self, fixtures_dir):
        base = fixtures_dir / "pages" / "amazon"
        return [
            ("amazon", (base / "hp14.html").read_text()),
            ("amazon", (base / "acer15.html").read_text()),
            ("amazon", (base / "notaproduct.html").read_text()),
        ]

    def test_skips_titleless_pages(self, fixtures_dir, amazon_config, caplog):
        pages = self._pages(fixtures_dir)
        with caplog.at_level("WARNING"):
            corpus = build_corpus(pages, {"amazon": amazon_config}, "Laptop")
        assert len(corpus.records) == 2
        assert any("no title" in message for message in caplog.messages)

    def test_empty_page_list(self, amazon_config):
        corpus = build_corpus([], {"amazon": amazon_config}, "Laptop")
        assert corpus.records == []

    def test_unknown_site_raises(self, amazon_config):
        with pytest.raises(UnknownSiteError):
            build_corpus([("unknown", "<html/>")], {"amazon": amazon_config}, "Laptop")

    def test_duplicates_keep_first(self, fixtures_dir, amazon_config):
        base = fixtures_dir / "pages" / "amazon"
        html = (base / "hp14.html").read_text()
        corpus = build_corpus(
            [("amazon", html), ("amazon", html)], {"amazon": amazon_config}, "Laptop"
        )
        assert len(corpus.records) == 1


class TestCorpusIO:
    def test_round_trip_structural_identity(self, fixtures_dir, amazon_config, tmp_path):
        base = fixtures_dir / "pages" / "amazon"
        corpus = build_corpus(
            [("amazon", (base / "hp14.html").read_text()),
             ("amazon", (base / "acer15.html").read_text())],
            {"amazon": amazon_config},
            "Laptop",
        )
        path = tmp_path / "corpus.json"
        write_corpus(corpus, path)
        loaded = read_corpus(path)
        assert loaded == corpus

    def test_round_trip_bit_stable(self, fixtures_dir, amazon_config, tmp_path):
        base = fixtures_dir / "pages" / "amazon"
        corpus = build_corpus(
            [("amazon", (base / "hp14.html").read_text())],
            {"amazon": amazon_config},
            "Laptop",
        )
        first = tmp_path / "one.json"
        second = tmp_path / "two.json"
        write_corpus(corpus, first)
        write_corpus(read_corpus(first), second)
        assert first.read_bytes() == second.read_bytes()

    def test_missing_customer_reviews_key(self, tmp_path):
        path = tmp_path / "corpus.json"
        path.write_text(json.dumps([{"productDetails": {"Title": "X"}}]))
        with pytest.raises(SchemaError):
            read_corpus(path)

    def test_empty_reviews_preserved(self, tmp_path):
        from seopinion.ingestion import Corpus, ProductRecord, product_id_for

        record = ProductRecord(
            product_id=product_id_for("s", "T"),
            site_id="s",
            title="T",
            detail_parts={"Specs": []},
            reviews=[],
        )
        path = tmp_path / "corpus.json"
        write_corpus(Corpus(product_type="Laptop", records=[record]), path)
        loaded = read_corpus(path)
        assert loaded.records[0].reviews == []
        assert loaded.records[0].detail_parts == {"Specs": []}

    def test_not_json_is_schema_error(self, tmp_path):
        path = tmp_path / "corpus.json"
        path.write_text("not json at all {")
        with pytest.raises(SchemaError):
            read_corpus(path)
