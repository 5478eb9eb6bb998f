import re

import pytest

from augforge.errors import EmptyCorpusError
from augforge.filters import (
    CmpOp,
    Comparison,
    diacritic_filter,
    encoding_filter,
    englishness_filter,
    keywords_filter,
    length_filter,
    lexicon_bias_filter,
    load_bias_categories,
    named_entity_count_filter,
    numeric_filter,
    oscillatory_hallucination_filter,
    quantitative_question_filter,
    repetitions_filter,
    soundex_code,
    soundex_match_filter,
    special_casing_filter,
    token_amount_filter,
    yesno_question_filter,
)
from augforge.types import Example
from augforge.xform_char import diacritic_strip


def ex(text, text2=None):
    return Example(id="e", text=text, text2=text2)


GT3_WORDS = Comparison(CmpOp.GT, 3)


def test_length_words():
    assert length_filter(ex("Andrew played cricket in India"), "words", GT3_WORDS).value
    assert not length_filter(ex(""), "words", Comparison(CmpOp.GT, 0)).value
    assert length_filter(ex("a b c"), "words", Comparison(CmpOp.EQ, 3)).value


def test_length_chars():
    assert length_filter(ex("abcd"), "chars", Comparison(CmpOp.EQ, 4)).value
    with pytest.raises(ValueError):
        length_filter(ex("x"), "bytes", GT3_WORDS)


def test_keywords():
    verdict = keywords_filter(ex("Andrew played cricket in India"), {"cricket"})
    assert verdict.value and verdict.evidence
    assert not keywords_filter(ex("anything"), set()).value
    assert not keywords_filter(ex("cricketer"), {"cricket"}).value  # whole-token only
    assert keywords_filter(ex("CRICKET!"), {"cricket"}).value  # case-insensitive


def test_numeric():
    spelled = numeric_filter(ex("John bought a car worth dollar twenty five thousand ."))
    assert spelled.value and spelled.evidence
    assert not numeric_filter(ex("a car with no quantities anywhere")).value
    assert numeric_filter(ex("room 101")).value


def test_encoding():
    verdict = encoding_filter(ex("That souvenir sure was expensive at 60£.. or was it 60€?"), "ascii")
    assert verdict.value and verdict.evidence
    assert not encoding_filter(ex("plain ascii"), "ascii").value
    assert not encoding_filter(ex("café"), "latin1").value
    assert encoding_filter(ex("café €5"), "latin1").value  # € is not Latin-1


def test_special_casing():
    assert special_casing_filter(ex("let's go to chipotle")).value
    assert not special_casing_filter(ex("Normal mixed Sentence here")).value
    assert special_casing_filter(ex("THE TITLE")).value
    assert special_casing_filter(ex("A Title Cased Line")).value
    assert not special_casing_filter(ex("1234 ...")).value  # no cased characters


def test_repetitions():
    verdict = repetitions_filter(ex("I I want to sleep"))
    assert verdict.value and verdict.evidence
    assert not repetitions_filter(ex("I want to sleep")).value
    assert repetitions_filter(ex("she had had enough")).value
    assert repetitions_filter(ex("The the case differs")).value  # case-insensitive


def test_diacritic():
    verdict = diacritic_filter(ex("She lookèd east"))
    assert verdict.value and verdict.evidence
    assert not diacritic_filter(ex("plain")).value


def test_diacritic_after_strip_composition():
    texts = ["She lookèd east", "café au lait", "naïve résumé", "plain"]
    for text in texts:
        assert not diacritic_filter(ex(diacritic_strip(text))).value


def test_token_amount():
    sentence = "Andrew played cricket in a soccer stadium in India at 9pm"
    assert token_amount_filter(ex(sentence), "in", Comparison(CmpOp.EQ, 2)).value
    assert token_amount_filter(ex("no match"), "zebra", Comparison(CmpOp.EQ, 0)).value
    assert token_amount_filter(ex("in in in"), "in", Comparison(CmpOp.GT, 2)).value


def test_soundex_codes():
    # hand-applied classic rules
    assert soundex_code("Robert") == "R163"
    assert soundex_code("trombone") == "T651"
    assert soundex_code("trombno") == "T651"
    assert soundex_code("Ashcraft") == "A261"  # h/w transparency
    assert soundex_code("Tymczak") == "T522"
    assert soundex_code("Pfister") == "P236"
    assert soundex_code("a") == "A000"


def test_soundex_format_property():
    words = "the quick brown fox jumps over lazy dog trombone xylophone".split()
    for w in words:
        assert re.fullmatch(r"[A-Z][0-9]{3}", soundex_code(w))


def test_soundex_filter():
    verdict = soundex_match_filter(ex("I left my trombno on the train"), ["trombone"])
    assert verdict.value and verdict.evidence
    assert not soundex_match_filter(ex("anything"), []).value


def test_yesno():
    assert yesno_question_filter(ex("Wasn't she angry when you told her about the accident?")).value
    assert not yesno_question_filter(ex("Where is Delhi located?")).value
    assert not yesno_question_filter(ex("Hello there.")).value
    assert yesno_question_filter(ex("Can you help?")).value


def test_quantitative():
    assert quantitative_question_filter(ex("How long does the journey take?")).value
    assert quantitative_question_filter(ex("How many apples?")).value
    assert not quantitative_question_filter(ex("Why did he leave?")).value
    assert not quantitative_question_filter(ex("How many apples.")).value  # not a question


def test_englishness():
    line = "Colour is an attribute of light that is perceived by the human eye."
    assert englishness_filter(ex(line), threshold=1).value
    assert not englishness_filter(ex("Color is an attribute"), threshold=1).value
    assert englishness_filter(ex("the lorry is here"), threshold=0).value
    assert not englishness_filter(ex(""), threshold=0).value


def test_oscillatory():
    source = "Community, European Parliament common regional policy, Mediterranean region"
    target = "Arbeitsbedingungen, berufliche Bildung, berufliche Bildung, berufliche Bildung"
    assert oscillatory_hallucination_filter(source, target, threshold=2).value
    assert not oscillatory_hallucination_filter(source, source, threshold=1).value
    assert not oscillatory_hallucination_filter(source, "Wort", threshold=1).value


def test_bias_filter():
    categories = load_bias_categories()
    texts = ["He went home", "He drives a car", "She has returned"]
    verdicts = lexicon_bias_filter(texts, {"gender": categories["gender"]}, 0.8)
    assert verdicts["gender"].value  # 1 female vs 2 male: imbalance flagged
    balanced = lexicon_bias_filter(["He walks", "She walks"], {"gender": categories["gender"]}, 1.0)
    assert not balanced["gender"].value
    with pytest.raises(EmptyCorpusError):
        lexicon_bias_filter([], {"gender": categories["gender"]}, 0.8)


def test_bias_filter_no_hits_not_flagged():
    categories = load_bias_categories()
    verdicts = lexicon_bias_filter(["nothing gendered"], {"gender": categories["gender"]}, 0.8)
    assert not verdicts["gender"].value


def test_named_entity_count_stub():
    assert named_entity_count_filter(
        ex("Novak Djokovic is the greatest tennis player of all time."),
        Comparison(CmpOp.GT, 1),
    ).value
    assert not named_entity_count_filter(ex("nothing capitalized here"), Comparison(CmpOp.GT, 0)).value


def test_verdict_truthiness_and_purity():
    verdict = keywords_filter(ex("cricket"), {"cricket"})
    assert bool(verdict) is True
    again = keywords_filter(ex("cricket"), {"cricket"})
    assert verdict == again  # deterministic, no hidden state


def test_comparison_ops():
    assert Comparison(CmpOp.LT, 3).check(2)
    assert Comparison(CmpOp.LE, 3).check(3)
    assert Comparison(CmpOp.EQ, 3).check(3)
    assert Comparison(CmpOp.GE, 3).check(3)
    assert Comparison(CmpOp.GT, 3).check(4)
    assert not Comparison(CmpOp.GT, 3).check(3)
