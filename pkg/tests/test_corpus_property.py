"""Round-trip property for corpus persistence over generated records."""

import string

from hypothesis import given, settings, strategies as st

from seopinion.ingestion import Corpus, ProductRecord, product_id_for, read_corpus, write_corpus

# printable, whitespace-normal text the extractor could actually produce
clean_text = st.text(
    alphabet=string.ascii_letters + string.digits + " .,!?'-",
    min_size=1,
    max_size=40,
).map(lambda s: " ".join(s.split())).filter(bool)

part_names = st.sampled_from(
    ["About this item", "Specs", "Product information", "Description", "Highlights"]
)


@st.composite
def records(draw, index: int):
    title = draw(clean_text)
    site = draw(st.sampled_from(["amazon", "flipkart", "ebay", "walmart", "bestbuy"]))
    # index salt keeps generated titles from colliding into one product_id
    title = f"{title} #{index}"
    parts = draw(
        st.dictionaries(part_names, st.lists(clean_text, max_size=4), max_size=4)
    )
    tabular = draw(st.sets(st.sampled_from(sorted(parts)), max_size=len(parts))) if parts else set()
    return ProductRecord(
        product_id=product_id_for(site, title),
        site_id=site,
        title=title,
        detail_parts=parts,
        reviews=draw(st.lists(clean_text, max_size=5)),
        tabular_parts=frozenset(tabular),
    )


@st.composite
def corpora(draw):
    n = draw(st.integers(min_value=1, max_value=5))
    return Corpus(
        product_type=draw(st.sampled_from(["Laptop", "Camera", "Phone"])),
        records=[draw(records(i)) for i in range(n)],
    )


@settings(max_examples=40, deadline=None)
@given(corpora())
def test_write_read_is_identity(tmp_path_factory, corpus):
    path = tmp_path_factory.mktemp("roundtrip") / "corpus.json"
    write_corpus(corpus, path)
    assert read_corpus(path) == corpus


@settings(max_examples=20, deadline=None)
@given(corpora())
def test_write_is_byte_stable(tmp_path_factory, corpus):
    base = tmp_path_factory.mktemp("stability")
    first, second = base / "a.json", base / "b.json"
    write_corpus(corpus, first)
    write_corpus(read_corpus(first), second)
    assert first.read_bytes() == second.read_bytes()
