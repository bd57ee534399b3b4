import numpy as np
import pytest
from hypothesis import given, strategies as st

from seopinion.errors import DimensionMismatch, ParseError, ValidationError, ZeroVector
from seopinion.nlp import (
    EmbeddingTable,
    cosine,
    derive_trigram_buckets,
    embed,
    load_embeddings,
    safe_cosine,
    term_vector,
)

vectors_st = st.lists(
    st.floats(min_value=-10, max_value=10, allow_nan=False), min_size=2, max_size=8
)


class TestCosine:
    def test_self_similarity(self):
        v = np.array([0.3, -1.2, 4.0])
        assert cosine(v, v) == pytest.approx(1.0, abs=1e-9)

    def test_orthogonal(self):
        assert cosine(np.array([1.0, 0.0]), np.array([0.0, 1.0])) == pytest.approx(0.0)

    def test_zero_vector_raises(self):
        with pytest.raises(ZeroVector):
            cosine(np.zeros(3), np.ones(3))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            cosine(np.ones(3), np.ones(4))

    def test_safe_cosine_zero_fallback(self):
        assert safe_cosine(np.zeros(3), np.ones(3)) == 0.0

    @given(vectors_st, vectors_st)
    def test_symmetry_and_bound(self, u_list, v_list):
        size = min(len(u_list), len(v_list))
        u = np.array(u_list[:size])
        v = np.array(v_list[:size])
        if np.linalg.norm(u) == 0 or np.linalg.norm(v) == 0:
            return
        assert cosine(u, v) == pytest.approx(cosine(v, u), abs=1e-12)
        assert abs(cosine(u, v)) <= 1 + 1e-12


class TestEmbeddingTable:
    def test_bundled_vectors_consistent(self, table):
        assert table.dim == 50
        for vec in list(table.vectors.values())[:50]:
            assert vec.shape == (50,)
            assert np.all(np.isfinite(vec))

    def test_oov_embeds_to_zero_and_flagged(self, table):
        vec = embed(table, "zorblax")
        assert not np.any(vec)
        assert table.is_oov("zorblax")
        assert not table.is_oov("screen")

    def test_trigram_fallback_when_configured(self, table):
        small = EmbeddingTable(
            dim=table.dim, vectors={w: table.vectors[w] for w in ["screen", "display"]}
        )
        with_buckets = derive_trigram_buckets(small, n_buckets=64)
        vec = embed(with_buckets, "screeen")  # typo shares trigrams with "screen"
        assert np.any(vec)
        assert not with_buckets.is_oov("screeen")

    def test_term_vector_multiword_mean(self, table):
        mean = (table.vectors["screen"] + table.vectors["size"]) / 2
        assert np.allclose(term_vector(table, "screen size"), mean)
        # hyphenated form embeds identically
        assert np.allclose(term_vector(table, "screen-size"), mean)

    def test_term_vector_all_oov_is_zero(self, table):
        assert not np.any(term_vector(table, "zorblax qwerty"))


class TestLoadEmbeddings:
    def test_dim_mismatch_rejected(self, tmp_path):
        path = tmp_path / "vecs.txt"
        path.write_text("a 1.0 2.0\nb 1.0 2.0 3.0\n")
        with pytest.raises(DimensionMismatch):
            load_embeddings(path)

    def test_nan_rejected(self, tmp_path):
        path = tmp_path / "vecs.txt"
        path.write_text("a 1.0 nan\n")
        with pytest.raises(ValidationError):
            load_embeddings(path)

    def test_garbage_rejected(self, tmp_path):
        path = tmp_path / "vecs.txt"
        path.write_text("a one two\n")
        with pytest.raises(ParseError):
            load_embeddings(path)
