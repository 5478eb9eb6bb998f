"""Boolean subpopulation predicates over examples.

Every filter here is pure and deterministic; none takes a random source.
Verdicts carry byte-span evidence where the decision hinges on concrete
text positions.
"""

from __future__ import annotations

import json
import unicodedata
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

from .errors import EmptyCorpusError
from .numwords import is_number_word
from .resources import data_path, read_wordlist
from .tokenizer import Token, TokenKind, tokenize
from .types import Example

Span = tuple[int, int]


@dataclass(frozen=True)
class FilterVerdict:
    value: bool
    evidence: tuple[Span, ...] = ()

    def __bool__(self) -> bool:
        return self.value


class CmpOp(Enum):
    LT = "<"
    LE = "<="
    EQ = "=="
    GE = ">="
    GT = ">"


@dataclass(frozen=True)
class Comparison:
    op: CmpOp
    threshold: float

    def check(self, value) -> bool:
        if self.op is CmpOp.LT:
            return value < self.threshold
        if self.op is CmpOp.LE:
            return value <= self.threshold
        if self.op is CmpOp.EQ:
            return value == self.threshold
        if self.op is CmpOp.GE:
            return value >= self.threshold
        return value > self.threshold


def _word_tokens(text: str) -> list[Token]:
    return [t for t in tokenize(text) if t.kind is TokenKind.WORD]


def _texts(ex: Example) -> list[str]:
    return [ex.text] if ex.text2 is None else [ex.text, ex.text2]


def length_filter(ex: Example, unit: str, cmp: Comparison) -> FilterVerdict:
    """unit: "words" counts word tokens, "chars" counts code points."""
    text = ex.text
    if unit == "words":
        count = len(_word_tokens(text))
    elif unit == "chars":
        count = len(text)
    else:
        raise ValueError(f"unknown length unit: {unit!r}")
    return FilterVerdict(cmp.check(count))


def keywords_filter(ex: Example, keywords) -> FilterVerdict:
    """Whole-token, case-insensitive keyword match."""
    wanted = {k.lower() for k in keywords}
    spans = tuple(
        t.span
        for text in _texts(ex)
        for t in _word_tokens(text)
        if t.text.lower() in wanted
    )
    return FilterVerdict(bool(spans), spans)


def numeric_filter(ex: Example) -> FilterVerdict:
    """True when the text carries a numeric value, as digits or spelled out."""
    spans = []
    for text in _texts(ex):
        for t in tokenize(text):
            if t.kind is TokenKind.NUMBER:
                spans.append(t.span)
            elif t.kind is TokenKind.WORD and is_number_word(t.text):
                spans.append(t.span)
    return FilterVerdict(bool(spans), tuple(spans))


def encoding_filter(ex: Example, encoding: str = "ascii") -> FilterVerdict:
    """True when any character falls outside the given encoding
    ("ascii" or "latin1")."""
    limit = {"ascii": 0x7F, "latin1": 0xFF, "latin-1": 0xFF}[encoding.lower()]
    spans = []
    for text in _texts(ex):
        byte_pos = 0
        for ch in text:
            nbytes = len(ch.encode("utf-8"))
            if ord(ch) > limit:
                spans.append((byte_pos, byte_pos + nbytes))
            byte_pos += nbytes
    return FilterVerdict(bool(spans), tuple(spans))


def _is_title_cased(word_tokens: list[Token]) -> bool:
    return all(
        t.text[:1].isupper() and t.text[1:] == t.text[1:].lower() for t in word_tokens
    )


def special_casing_filter(ex: Example) -> FilterVerdict:
    """True when the text is all-lower, all-upper, or title-cased."""
    text = ex.text
    if not any(ch.isalpha() for ch in text):
        return FilterVerdict(False)
    if text == text.lower() or text == text.upper():
        return FilterVerdict(True)
    word_tokens = _word_tokens(text)
    return FilterVerdict(bool(word_tokens) and _is_title_cased(word_tokens))


def repetitions_filter(ex: Example) -> FilterVerdict:
    """Adjacent duplicate words, case-insensitive."""
    spans = []
    for text in _texts(ex):
        word_tokens = _word_tokens(text)
        for a, b in zip(word_tokens, word_tokens[1:]):
            if a.text.lower() == b.text.lower():
                spans.append((a.span[0], b.span[1]))
    return FilterVerdict(bool(spans), tuple(spans))


def diacritic_filter(ex: Example) -> FilterVerdict:
    spans = []
    for text in _texts(ex):
        byte_pos = 0
        for ch in text:
            nbytes = len(ch.encode("utf-8"))
            decomposed = unicodedata.normalize("NFD", ch)
            if any(unicodedata.combining(c) for c in decomposed):
                spans.append((byte_pos, byte_pos + nbytes))
            byte_pos += nbytes
    return FilterVerdict(bool(spans), tuple(spans))


def token_amount_filter(ex: Example, token: str, cmp: Comparison) -> FilterVerdict:
    wanted = token.lower()
    hits = tuple(
        t.span
        for text in _texts(ex)
        for t in _word_tokens(text)
        if t.text.lower() == wanted
    )
    return FilterVerdict(cmp.check(len(hits)), hits if hits else ())


_SOUNDEX_CODES = {}
for _letters, _digit in (
    ("BFPV", "1"),
    ("CGJKQSXZ", "2"),
    ("DT", "3"),
    ("L", "4"),
    ("MN", "5"),
    ("R", "6"),
):
    for _ch in _letters:
        _SOUNDEX_CODES[_ch] = _digit


def soundex_code(word: str) -> str:
    """Classic American Soundex: initial letter plus three digits.  Adjacent
    same-coded letters collapse, including across H and W; vowels separate."""
    letters = [ch for ch in word.upper() if "A" <= ch <= "Z"]
    if not letters:
        return ""
    first = letters[0]
    digits = []
    prev = _SOUNDEX_CODES.get(first, "")
    for ch in letters[1:]:
        code = _SOUNDEX_CODES.get(ch, "")
        if ch in "HW":
            continue  # transparent: previous code survives across h/w
        if code and code != prev:
            digits.append(code)
        prev = code
    return (first + "".join(digits))[:4].ljust(4, "0")


def soundex_match_filter(ex: Example, keywords) -> FilterVerdict:
    wanted = {soundex_code(k) for k in keywords if soundex_code(k)}
    if not wanted:
        return FilterVerdict(False)
    spans = tuple(
        t.span
        for text in _texts(ex)
        for t in _word_tokens(text)
        if soundex_code(t.text) in wanted
    )
    return FilterVerdict(bool(spans), spans)


_YESNO_STARTERS = frozenset(
    """
    am is are was were be been being
    do does did
    have has had
    can could will would shall should may might must
    isn't aren't wasn't weren't don't doesn't didn't haven't hasn't hadn't
    can't couldn't won't wouldn't shan't shouldn't mightn't mustn't ain't
    """.split()
)


def yesno_question_filter(ex: Example) -> FilterVerdict:
    text = ex.text.rstrip()
    if not text.endswith("?"):
        return FilterVerdict(False)
    word_tokens = _word_tokens(text)
    if not word_tokens:
        return FilterVerdict(False)
    first = word_tokens[0]
    if first.text.lower() in _YESNO_STARTERS:
        return FilterVerdict(True, (first.span,))
    return FilterVerdict(False)


_QUANTITY_ADVERBS = frozenset(
    "many much long old far often tall big heavy wide deep fast high large".split()
)


def quantitative_question_filter(ex: Example) -> FilterVerdict:
    """"How many/much/long/old/far ..." style questions."""
    text = ex.text.rstrip()
    if not text.endswith("?"):
        return FilterVerdict(False)
    word_tokens = _word_tokens(text)
    if len(word_tokens) >= 2 and word_tokens[0].text.lower() == "how":
        second = word_tokens[1]
        if second.text.lower() in _QUANTITY_ADVERBS:
            return FilterVerdict(True, (word_tokens[0].span, second.span))
    return FilterVerdict(False)


@lru_cache(maxsize=None)
def _britishisms(data_dir: str | None = None) -> frozenset[str]:
    return frozenset(read_wordlist(data_path("lexicons/englishness.txt", data_dir)))


def englishness_filter(ex: Example, threshold: int = 1) -> FilterVerdict:
    """True when at least max(threshold, 1) uniquely British markers occur."""
    markers = _britishisms()
    spans = tuple(
        t.span
        for text in _texts(ex)
        for t in _word_tokens(text)
        if t.text.lower() in markers
    )
    return FilterVerdict(len(spans) >= max(threshold, 1), spans)


def _max_bigram_count(text: str) -> int:
    word_texts = [t.text.lower() for t in _word_tokens(text)]
    counts: dict[tuple[str, str], int] = {}
    for pair in zip(word_texts, word_texts[1:]):
        counts[pair] = counts.get(pair, 0) + 1
    return max(counts.values(), default=0)


def oscillatory_hallucination_filter(
    source: str, target: str, threshold: int = 2
) -> FilterVerdict:
    """Repeating bigram structure in the target relative to the source."""
    diff = _max_bigram_count(target) - _max_bigram_count(source)
    return FilterVerdict(diff >= threshold)


@lru_cache(maxsize=None)
def load_bias_categories(data_dir: str | None = None) -> dict[str, dict[str, frozenset[str]]]:
    raw = json.loads(data_path("bias_lexicons.json", data_dir).read_text(encoding="utf-8"))
    return {
        name: {
            "minor": frozenset(w.lower() for w in sides["minor"]),
            "major": frozenset(w.lower() for w in sides["major"]),
        }
        for name, sides in raw.items()
    }


def lexicon_bias_filter(
    corpus_texts: list[str],
    categories: dict[str, dict[str, frozenset[str]]],
    ratio_threshold: float = 0.8,
) -> dict[str, FilterVerdict]:
    """Per category: True flags an imbalance, i.e. the configured minor side's
    hit count falls below ``ratio_threshold`` times the major side's."""
    if not corpus_texts:
        raise EmptyCorpusError("bias filter needs at least one example")
    counts = {name: {"minor": 0, "major": 0} for name in categories}
    for text in corpus_texts:
        for t in _word_tokens(text):
            word = t.text.lower()
            for name, sides in categories.items():
                if word in sides["minor"]:
                    counts[name]["minor"] += 1
                if word in sides["major"]:
                    counts[name]["major"] += 1
    verdicts = {}
    for name, c in counts.items():
        if c["major"] == 0:
            flagged = False  # nothing to be under-represented against
        else:
            flagged = (c["minor"] / c["major"]) < ratio_threshold
        verdicts[name] = FilterVerdict(flagged)
    return verdicts


@lru_cache(maxsize=None)
def _name_gazetteer(data_dir: str | None = None) -> frozenset[str]:
    return frozenset(read_wordlist(data_path("lexicons/given_names.txt", data_dir)))


def named_entity_count_filter(ex: Example, cmp: Comparison) -> FilterVerdict:
    """Gazetteer-stub entity counter: capitalized words that are not
    sentence-initial, plus bundled name-list hits.  An approximation of a
    model-based named-entity count, and documented as such."""
    names = _name_gazetteer()
    spans = []
    count = 0
    for text in _texts(ex):
        sentence_start = True
        for t in tokenize(text):
            if t.kind is TokenKind.PUNCT and t.text in ".!?":
                sentence_start = True
                continue
            if t.kind is not TokenKind.WORD:
                continue
            capitalized = t.text[:1].isupper() and len(t.text) > 1
            if capitalized and (not sentence_start or t.text in names):
                count += 1
                spans.append(t.span)
            sentence_start = False
    return FilterVerdict(cmp.check(count), tuple(spans))
