import json
from pathlib import Path

import pytest

from seopinion.ingestion import load_site_config, read_corpus
from seopinion.nlp import load_bundled_embeddings, load_bundled_lexicon

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def lexicon():
    return load_bundled_lexicon()


@pytest.fixture(scope="session")
def table():
    return load_bundled_embeddings()


@pytest.fixture(scope="session")
def amazon_config():
    return load_site_config(FIXTURES / "rules" / "amazon.rules")


@pytest.fixture(scope="session")
def hp14_html() -> str:
    return (FIXTURES / "pages" / "amazon" / "hp14.html").read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def planted_corpus():
    return read_corpus(FIXTURES / "planted_corpus.json")


@pytest.fixture(scope="session")
def expected_planted() -> dict:
    return json.loads((FIXTURES / "expected_planted.json").read_text(encoding="utf-8"))
