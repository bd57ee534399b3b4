import pytest

from seopinion.errors import ParseError, ValidationError
from seopinion.nlp import lexicon_score, load_lexicon
from seopinion.nlp.lexicon import SentimentLexicon


class TestLexiconScore:
    def test_absent_lemma_scores_zero(self, lexicon):
        assert lexicon_score(lexicon, "zorblax") == (0.0, 0.0)

    def test_nice_matches_bundled_file(self, lexicon, fixtures_dir):
        # independent oracle: read the data file directly
        from seopinion.nlp import bundled_lexicon_path

        expected = None
        for line in bundled_lexicon_path().read_text().splitlines():
            if line.startswith("nice\t"):
                _, pos, neg = line.split("\t")
                expected = (float(pos), float(neg))
        assert expected is not None
        assert lexicon_score(lexicon, "nice") == expected

    def test_lookup_does_not_mutate(self, lexicon):
        before = dict(lexicon.entries)
        lexicon_score(lexicon, "nice")
        lexicon_score(lexicon, "missing-word")
        assert dict(lexicon.entries) == before

    def test_entries_are_read_only(self, lexicon):
        with pytest.raises(TypeError):
            lexicon.entries["nice"] = (1.0, 0.0)  # type: ignore[index]


class TestLoadLexicon:
    def test_out_of_range_score_rejected(self, tmp_path):
        path = tmp_path / "bad.tsv"
        path.write_text("nice\t1.2\t0.0\n")
        with pytest.raises(ValidationError):
            load_lexicon(path)

    def test_malformed_line_rejected(self, tmp_path):
        path = tmp_path / "bad.tsv"
        path.write_text("nice 0.5 0.0\n")
        with pytest.raises(ParseError):
            load_lexicon(path)

    def test_all_bundled_scores_in_range(self, lexicon):
        assert isinstance(lexicon, SentimentLexicon)
        assert len(lexicon) > 0
        for pos, neg in lexicon.entries.values():
            assert 0.0 <= pos <= 1.0
            assert 0.0 <= neg <= 1.0
