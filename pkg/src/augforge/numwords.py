"""English cardinal numbers: digits -> words and the inverse parser.

The two directions are written independently on purpose: the parser serves as
the oracle for the generator (and powers spelled-out-number detection and
words-format unit rewrites).
"""

from __future__ import annotations

from decimal import Decimal

_ONES = [
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight",
    "nine", "ten", "eleven", "twelve", "thirteen", "fourteen", "fifteen",
    "sixteen", "seventeen", "eighteen", "nineteen",
]
_TENS = [
    "", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy",
    "eighty", "ninety",
]
_SCALES = [
    (10 ** 12, "trillion"),
    (10 ** 9, "billion"),
    (10 ** 6, "million"),
    (10 ** 3, "thousand"),
]

_UNIT_VALUES = {w: i for i, w in enumerate(_ONES)}
_TEN_VALUES = {w: i * 10 for i, w in enumerate(_TENS) if w}
_SCALE_VALUES = {w: v for v, w in _SCALES}

NUMBER_WORDS = frozenset(_UNIT_VALUES) | frozenset(_TEN_VALUES) | frozenset(_SCALE_VALUES) | {
    "hundred"
}


def _below_thousand(n: int) -> str:
    parts = []
    if n >= 100:
        parts.append(_ONES[n // 100] + " hundred")
        n %= 100
    if n >= 20:
        tens = _TENS[n // 10]
        parts.append(tens + "-" + _ONES[n % 10] if n % 10 else tens)
    elif n:
        parts.append(_ONES[n])
    return " ".join(parts)


def int_to_words(n: int) -> str:
    if n < 0:
        return "minus " + int_to_words(-n)
    if n == 0:
        return "zero"
    groups = []
    remaining = n
    for scale, scale_word in _SCALES:
        if remaining >= scale:
            groups.append(_below_thousand(remaining // scale) + " " + scale_word)
            remaining %= scale
    if remaining:
        groups.append(_below_thousand(remaining))
    return ", ".join(groups)


def number_token_to_words(token: str) -> str:
    """Render one Number token ("25,000", "3.5") as cardinal words."""
    plain = token.replace(",", "")
    if "." in plain:
        int_part, _, frac = plain.partition(".")
        digits = " ".join(_ONES[int(d)] for d in frac)
        return f"{int_to_words(int(int_part))} point {digits}"
    return int_to_words(int(plain))


class WordNumberParser:
    """Incremental parser over lowercase word tokens.

    Feed words one at a time with :meth:`accepts`; the value so far is in
    :attr:`value`.  Rejects malformed runs like "one two" so that scanning a
    sentence never glues separate numbers together.
    """

    def __init__(self):
        self.total = 0
        self.current = 0
        self.frac_digits: list[str] = []
        self.in_fraction = False
        self.count = 0
        self._last: str | None = None

    def accepts(self, word: str) -> bool:
        word = word.lower()
        if self.in_fraction:
            if word in _UNIT_VALUES and _UNIT_VALUES[word] <= 9:
                self.frac_digits.append(str(_UNIT_VALUES[word]))
                self.count += 1
                return True
            return False
        if word == "point":
            if self.count == 0:
                return False
            self.in_fraction = True
            self.count += 1
            return True
        if word == "and":
            return self._last in ("hundred", "scale")
        if word in _UNIT_VALUES:
            value = _UNIT_VALUES[word]
            if self._last == "unit":
                return False
            if self._last == "ten" and not 1 <= value <= 9:
                return False
            self.current += value
            self._last = "unit"
            self.count += 1
            return True
        if word in _TEN_VALUES:
            if self._last in ("unit", "ten"):
                return False
            self.current += _TEN_VALUES[word]
            self._last = "ten"
            self.count += 1
            return True
        if word == "hundred":
            if self._last not in ("unit", "ten") or self.current == 0 or self.current >= 100:
                return False
            self.current *= 100
            self._last = "hundred"
            self.count += 1
            return True
        if word in _SCALE_VALUES:
            if self.current == 0:
                return False
            self.total += self.current * _SCALE_VALUES[word]
            self.current = 0
            self._last = "scale"
            self.count += 1
            return True
        return False

    @property
    def value(self) -> Decimal:
        whole = self.total + self.current
        if self.frac_digits:
            return Decimal(f"{whole}.{''.join(self.frac_digits)}")
        return Decimal(whole)


def words_to_number(text_words: list[str]) -> Decimal | None:
    """Parse a complete run of word tokens as one number, or None."""
    parser = WordNumberParser()
    fed = 0
    for word in text_words:
        for piece in word.split("-"):
            if not parser.accepts(piece):
                return None
            fed += 1
    if fed == 0:
        return None
    return parser.value


def is_number_word(word: str) -> bool:
    return word.lower() in NUMBER_WORDS
