import pytest
from hypothesis import given
from hypothesis import strategies as st

from hindi_lemmatizer.devanagari import strip_and_append
from hindi_lemmatizer.errors import EmptyInputError, TokenizationError
from hindi_lemmatizer.lemmatizer import (
    LemmaResult,
    Lemmatizer,
    Provenance,
    lemmatize,
    lemmatize_text,
    split_punctuation,
)
from hindi_lemmatizer.lexicon import Lexicon, load_lexicon
from hindi_lemmatizer.rules import RuleSet, SuffixRule, load_rules

FIG1_RULES = load_rules("ोँ\tा\t2\t10")


def test_fig1_rule_route():
    r = lemmatize("लडकोँ", Lexicon(), FIG1_RULES)
    assert (r.lemma, r.removed_suffix, r.appended, r.provenance) == ("लडका", "ोँ", "ा", Provenance.RULE)


@pytest.mark.parametrize(
    "word, lemma, suffix, appended, provenance",
    [
        ("लडकोँ", "लडका", None, None, "lexicon"),
        ("लडकी", "लडकी", None, None, "lexicon"),
        ("चिडियोँ", "चिडिया", None, None, "lexicon"),
        ("बालिकाओं", "बालिका", "ओं", None, "rule"),
        ("लडकियोँ", "लडकी", "ियोँ", "ी", "rule"),
        ("क", "क", None, None, "passthrough"),
    ],
)
def test_shipped_examples(shipped, word, lemma, suffix, appended, provenance):
    r = lemmatize(word, shipped.lexicon, shipped.rules)
    assert (r.lemma, r.removed_suffix, r.appended, str(r.provenance)) == (lemma, suffix, appended, provenance)


def test_input_is_normalized(shipped):
    # precomposed U+095B in the input, decomposed ज + nukta in the tables
    assert shipped.lemmatize("  न\u095bरें\n").lemma == "न\u091c\u093cर"


@pytest.mark.parametrize("word", ["", "   ", "\t\n"])
def test_empty_input(shipped, word):
    with pytest.raises(EmptyInputError):
        shipped.lemmatize(word)


def test_multi_token_input(shipped):
    with pytest.raises(TokenizationError):
        shipped.lemmatize("सडकों लडकी")


def test_result_invariants():
    with pytest.raises(ValueError):
        LemmaResult("क", "क", Provenance.LEXICON, removed_suffix="ी")
    with pytest.raises(ValueError):
        LemmaResult("की", "क", Provenance.RULE)
    with pytest.raises(ValueError):
        LemmaResult("की", "क", Provenance.PASSTHROUGH)


def test_only_first_rule_applies():
    # no cascading: बालिका ends in ा but is not stripped a second time
    rs = RuleSet([SuffixRule("ओं"), SuffixRule("ा")])
    assert lemmatize("बालिकाओं", Lexicon(), rs).lemma == "बालिका"


class TestText:
    def test_danda_skipped(self, shipped):
        out = shipped.lemmatize_text("सडकों ।")
        assert [t.token for t in out] == ["सडकों", "।"]
        assert out[0].result.lemma == "सडक"
        assert out[1].skipped

    def test_empty(self, shipped):
        assert lemmatize_text("", shipped.lexicon, shipped.rules) == []

    def test_no_devanagari(self, shipped):
        out = shipped.lemmatize_text("abc 123")
        assert [t.skipped for t in out] == [True, True]

    def test_attached_punctuation_reported(self, shipped):
        (tok,) = shipped.lemmatize_text("“सडकों,”")
        assert (tok.leading, tok.token, tok.trailing) == ("“", "सडकों", ",”")
        assert tok.result.lemma == "सडक"

    def test_comma_separated_list(self, shipped):
        out = shipped.lemmatize_text("नज़रें, सडकों, लडकी,")
        assert [t.result.lemma for t in out] == ["नज़र", "सडक", "लडकी"]

    def test_devanagari_digits_skipped(self, shipped):
        assert shipped.lemmatize_text("१२३")[0].skipped

    def test_order_preserved(self, shipped):
        words = "खुशी मजदूरी गरीबी सर्दी कमजोरी".split()
        out = shipped.lemmatize_text(" ".join(words))
        assert [t.token for t in out] == words


def test_split_punctuation():
    assert split_punctuation("॥क॥") == ("॥", "क", "॥")
    assert split_punctuation("...") == ("...", "", "")


def test_lexicon_precedence_over_any_rule(shipped):
    for entry in shipped.lexicon:
        # inject a top-priority rule that would rewrite everything after the first codepoint
        rogue = SuffixRule(entry.surface[1:], "X", 1, 0)
        rules = RuleSet([r for r in shipped.rules if r.suffix != rogue.suffix] + [rogue])
        assert rules.match(entry.surface)[0] == rogue
        r = lemmatize(entry.surface, shipped.lexicon, rules)
        assert r.provenance is Provenance.LEXICON
        assert r.lemma == entry.lemma


def test_rule_results_reconstruct(shipped, shipped_gold):
    for pair in shipped_gold:
        r = shipped.lemmatize(pair.word)
        if r.provenance is Provenance.RULE:
            assert strip_and_append(r.input, r.removed_suffix, r.appended or "") == r.lemma
            stem = r.lemma[: len(r.lemma) - len(r.appended or "")]
            assert stem + r.removed_suffix == r.input


def test_deterministic(shipped, shipped_gold):
    fresh = Lemmatizer(shipped.lexicon, shipped.rules)
    for pair in shipped_gold:
        assert shipped.lemmatize(pair.word) == fresh.lemmatize(pair.word)


@given(st.text(st.sampled_from(list("कखगलडसी ोँंािय।,")), max_size=30))
def test_text_is_total(text):
    lex = load_lexicon("लडकी\tलडकी")
    rs = load_rules("ोँ\t\nी\t\nियोँ\tी\t2")
    out = lemmatize_text(text, lex, rs)
    assert len(out) == len(text.split())
    for tok in out:
        assert tok.skipped or tok.result.lemma
