import pytest

from seopinion.nlp import Tag, light_lemma, penn_to_tag, pos_tag


class TestBaselineTagger:
    def test_closed_class_lexicon_and_adj(self):
        tagged = pos_tag(["the", "screen", "is", "nice"])
        assert [t.tag for t in tagged.tokens] == [Tag.OTHER, Tag.NOUN, Tag.VERB, Tag.ADJ]

    def test_suffix_rule_tion(self):
        assert pos_tag(["resolution"]).tokens[0].tag is Tag.NOUN

    def test_suffix_rules_adj_adv(self):
        tagged = pos_tag(["spacious", "vibrantly"])
        assert [t.tag for t in tagged.tokens] == [Tag.ADJ, Tag.ADV]

    def test_empty_input(self):
        tagged = pos_tag([])
        assert tagged.tokens == ()
        assert tagged.text == ""

    def test_unknown_word_defaults_to_noun(self):
        assert pos_tag(["zorblax"]).tokens[0].tag is Tag.NOUN

    def test_punctuation_and_numbers_are_other(self):
        tagged = pos_tag(["!!!", "100", "4k"])
        assert all(t.tag is Tag.OTHER for t in tagged.tokens)

    def test_total_and_deterministic(self):
        tokens = "Sadly the battery died quickly and the screen looks dull".split()
        first = pos_tag(tokens)
        second = pos_tag(tokens)
        assert len(first.tokens) == len(tokens)
        assert [t.tag for t in first.tokens] == [t.tag for t in second.tokens]

    def test_external_tagger_penn_mapdown(self):
        def stub(tokens):
            return ["DT", "NNS", "VBD", "JJR"]

        tagged = pos_tag(["the", "screens", "were", "better"], external=stub)
        assert [t.tag for t in tagged.tokens] == [Tag.OTHER, Tag.NOUN, Tag.VERB, Tag.ADJ]


class TestPennMapping:
    @pytest.mark.parametrize(
        "penn,expected",
        [("NN", Tag.NOUN), ("NNPS", Tag.NOUN), ("JJ", Tag.ADJ), ("JJS", Tag.ADJ),
         ("VB", Tag.VERB), ("VBG", Tag.VERB), ("RB", Tag.ADV), ("RBR", Tag.ADV),
         ("DT", Tag.OTHER), ("IN", Tag.OTHER), ("CD", Tag.OTHER)],
    )
    def test_mapdown(self, penn, expected):
        assert penn_to_tag(penn) is expected


class TestLightLemma:
    @pytest.mark.parametrize(
        "word,expected",
        [
            ("Screens", "screen"),
            ("batteries", "batteries"),   # -ies endings stay untouched
            ("sizes", "size"),
            ("boxes", "box"),
            ("glass", "glass"),
            ("was", "was"),
            ("this", "this"),
            ("laptop's", "laptop"),
            ("children", "child"),
            ("benchmarked", "benchmark"),  # unknown form reduces to a known stem
            ("rebooted", "rebooted"),      # known inflections keep their identity
            ("speed", "speed"),            # -ed is not stripped into nonsense
            ("NICE", "nice"),
        ],
    )
    def test_cases(self, word, expected):
        assert light_lemma(word) == expected

    def test_lemma_always_lowercase(self):
        for word in ["Screen", "BATTERY", "MiXeD"]:
            assert light_lemma(word) == light_lemma(word).lower()
