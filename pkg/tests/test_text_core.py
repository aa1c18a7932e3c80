import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sasseval.errors import DegenerateDocument, MissingResource
from sasseval.text_core import (Sentence, Token, analyze, count_syllables,
                                load_abbreviations, segment_sentences, tokenize)


class TestTokenize:
    def test_words_and_punctuation(self):
        tokens = tokenize("The cat sat.")
        words = [t.surface for t in tokens if t.is_word]
        puncts = [t.surface for t in tokens if not t.is_word]
        assert words == ["The", "cat", "sat"]
        assert puncts == ["."]

    def test_internal_hyphens_join(self):
        tokens = tokenize("state-of-the-art")
        assert len(tokens) == 1
        assert tokens[0].surface == "state-of-the-art"
        assert tokens[0].is_word
        # letters and digits only; the three hyphens are excluded
        assert tokens[0].char_count == 13

    def test_internal_apostrophe_joins(self):
        tokens = tokenize("don't stop")
        assert [t.surface for t in tokens] == ["don't", "stop"]

    def test_edge_hyphen_is_punctuation(self):
        tokens = tokenize("well- made")
        assert [t.surface for t in tokens] == ["well", "-", "made"]
        assert [t.is_word for t in tokens] == [True, False, True]

    def test_empty_input(self):
        assert tokenize("") == []

    def test_reconstruction_ignores_whitespace(self):
        text = "A fast (very fast!) run-through; cost: $3.50."
        rebuilt = "".join(t.surface for t in tokenize(text))
        assert rebuilt == "".join(text.split())

    def test_digits_count_as_word_chars(self):
        (token,) = tokenize("2024")
        assert token.is_word and token.char_count == 4

    def test_non_ascii_letters_count(self):
        (token,) = tokenize("café")
        assert token.is_word and token.char_count == 4

    @given(st.text(max_size=80))
    @settings(max_examples=200)
    def test_whitespace_insensitive(self, text):
        collapsed = " ".join(text.split())
        assert [t.surface for t in tokenize(text)] == \
            [t.surface for t in tokenize(collapsed)]

    @given(st.text(max_size=80))
    @settings(max_examples=200)
    def test_char_count_invariant(self, text):
        for token in tokenize(text):
            assert token.char_count == sum(1 for c in token.surface if c.isalnum())
            assert token.is_word == (token.char_count > 0)


class TestSegmentSentences:
    def test_two_sentences(self):
        assert len(segment_sentences("It rains. It pours.")) == 2

    def test_abbreviation_guard(self):
        assert len(segment_sentences("Dr. Smith arrived.")) == 1

    def test_et_al_guard(self):
        assert len(segment_sentences("As shown by Smith et al. The result holds.")) == 1

    def test_no_terminator_single_sentence(self):
        assert len(segment_sentences("No terminator here")) == 1

    def test_lowercase_continuation_not_split(self):
        assert len(segment_sentences("It was v. cold outside today.")) == 1

    def test_question_and_exclamation(self):
        assert len(segment_sentences("Really? Yes! Fine.")) == 3

    def test_opening_quote_starts_sentence(self):
        sents = segment_sentences('He left. "Stay," she said.')
        assert len(sents) == 2

    def test_terminator_only_fragment_merges(self):
        sents = segment_sentences("Wait... !!")
        assert len(sents) == 1

    def test_every_sentence_has_a_word(self):
        for s in segment_sentences("One. Two! Three? (Four.)"):
            assert any(t.is_word for t in s.tokens)

    def test_custom_abbreviations(self):
        no_guard = segment_sentences("See Zzz. Next point.", abbreviations=frozenset())
        guarded = segment_sentences("See Zzz. Next point.",
                                    abbreviations=frozenset({"Zzz."}))
        assert len(no_guard) == 2
        assert len(guarded) == 1

    def test_abbreviation_needs_word_boundary(self):
        # "...Amr." must not match the entry "Mr."
        sents = segment_sentences("They call him Amr. He smiled.",
                                  abbreviations=frozenset({"Mr."}))
        assert len(sents) == 2

    def test_missing_abbreviation_file(self):
        with pytest.raises(MissingResource):
            load_abbreviations("/nonexistent/abbrev.txt")

    def test_sentence_requires_word_token(self):
        with pytest.raises(ValueError):
            Sentence(tokens=(Token(surface=".", char_count=0, is_word=False),))


class TestCountSyllables:
    # Expected values frozen from a pronunciation dictionary: cat /K AE T/ -> 1,
    # beautiful /B Y UW T AH F AH L/ -> 3, the /DH AH/ -> 1.
    @pytest.mark.parametrize("word,expected", [
        ("cat", 1),
        ("beautiful", 3),
        ("the", 1),
        ("mat", 1),
        ("rains", 1),
        ("pours", 1),
        ("window", 2),
        ("like", 1),
        ("idea", 2),
    ])
    def test_known_words(self, word, expected):
        assert count_syllables(word) == expected

    def test_minimum_one(self):
        assert count_syllables("7") == 1
        assert count_syllables("rhythm") >= 1

    @given(st.text(alphabet=st.characters(categories=("Ll", "Lu")), min_size=1, max_size=15))
    @settings(max_examples=200)
    def test_at_least_one_syllable(self, word):
        assert count_syllables(word) >= 1

    def test_case_insensitive(self):
        assert count_syllables("Beautiful") == count_syllables("beautiful")


class TestAnalyze:
    def test_hand_counted_fixture(self):
        doc = analyze("The cat sat on the mat.")
        assert doc.n_sentences == 1
        assert doc.n_words == 6
        assert doc.n_chars == 17
        assert doc.n_syllables == 6

    def test_two_sentence_fixture(self):
        doc = analyze("It rains. It pours.")
        assert doc.n_sentences == 2
        assert doc.n_words == 4

    def test_whitespace_only_raises(self):
        with pytest.raises(DegenerateDocument):
            analyze("   ")

    def test_empty_raises(self):
        with pytest.raises(DegenerateDocument):
            analyze("")

    def test_punctuation_only_raises(self):
        with pytest.raises(DegenerateDocument):
            analyze("... !!! ???")

    def test_counts_match_type_invariants(self):
        doc = analyze("Alpha beta. Gamma delta epsilon!")
        assert doc.n_sentences == len(doc.sentences)
        words = [t for s in doc.sentences for t in s.tokens if t.is_word]
        assert doc.n_words == len(words)
        assert doc.n_chars == sum(t.char_count for t in words)
        assert doc.n_syllables >= doc.n_words

    def test_determinism(self):
        text = "Mixing cases, hyphen-words and Dr. Smith's data. Second sentence!"
        assert analyze(text) == analyze(text)

    def test_concatenation_adds_word_counts(self):
        a = "The cat sat on the mat."
        b = "It rains. It pours."
        combined = analyze(a + " " + b)
        assert combined.n_words == analyze(a).n_words + analyze(b).n_words

    @given(st.lists(st.sampled_from(["word", "token", "cat", "beautiful", "run"]),
                    min_size=1, max_size=12))
    @settings(max_examples=100)
    def test_syllables_bounded_below_by_words(self, words):
        doc = analyze(" ".join(words) + ".")
        assert doc.n_syllables >= doc.n_words
