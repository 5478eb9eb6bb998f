"""Structured rewrites of dates, numerals, currencies, and physical units.

All user-visible arithmetic is exact decimal; binary floating point never
touches a rendered amount.
"""

from __future__ import annotations

import datetime
import re
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from functools import lru_cache

from .errors import UnknownCurrencyError, UnknownUnitError
from .numwords import WordNumberParser, int_to_words, number_token_to_words
from .resources import data_path, read_tsv
from .rng import Rng
from .tokenizer import TokenKind, tokenize

# --- dates -----------------------------------------------------------------

_MONTHS = [
    "January", "February", "March", "April", "May", "June", "July",
    "August", "September", "October", "November", "December",
]
_MONTH_ABBR = ["Jan", "Feb", "Mar", "Apr", "May", "Jun", "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"]
_MONTH_NUM = {name.lower(): i + 1 for i, name in enumerate(_MONTHS)}
_MONTH_NUM.update({abbr.lower(): i + 1 for i, abbr in enumerate(_MONTH_ABBR)})
_MONTH_NUM["sept"] = 9

_MONTH_NAME_RE = "|".join(_MONTHS + ["Sept"] + _MONTH_ABBR)

_DATE_PATTERNS = [
    ("iso_full", re.compile(r"\b(\d{4})-(\d{2})-(\d{2})\b")),
    ("iso_month", re.compile(r"\b(\d{4})-(\d{2})\b(?!-)")),
    (
        "month_d_y",
        re.compile(rf"\b({_MONTH_NAME_RE})\.? (\d{{1,2}})(?:st|nd|rd|th)?, (\d{{4}})\b"),
    ),
    ("d_month_y", re.compile(rf"\b(\d{{1,2}}) ({_MONTH_NAME_RE})\.? (\d{{4}})\b")),
    ("month_y", re.compile(rf"\b({_MONTH_NAME_RE})\.? (\d{{4}})\b")),
    ("slashed", re.compile(r"\b(\d{1,2})/(\d{1,2})/(\d{4})\b")),
]

DATE_FORMATS = ("iso", "long", "abbrev", "day-first", "day-first-abbrev", "slash-dmy", "slash-mdy")


@dataclass(frozen=True)
class _DateMention:
    start: int
    end: int
    year: int
    month: int
    day: int | None  # None for month-precision mentions


def _valid_date(year: int, month: int, day: int | None) -> bool:
    if not 1 <= month <= 12:
        return False
    if day is None:
        return True
    try:
        datetime.date(year, month, day)
        return True
    except ValueError:
        return False


def _find_dates(text: str) -> list[_DateMention]:
    taken: list[tuple[int, int]] = []
    mentions: list[_DateMention] = []
    for name, pattern in _DATE_PATTERNS:
        for m in pattern.finditer(text):
            if any(m.start() < e and s < m.end() for s, e in taken):
                continue
            if name == "iso_full":
                y, mo, d = int(m.group(1)), int(m.group(2)), int(m.group(3))
            elif name == "iso_month":
                y, mo, d = int(m.group(1)), int(m.group(2)), None
            elif name == "month_d_y":
                y, mo, d = int(m.group(3)), _MONTH_NUM[m.group(1).lower()], int(m.group(2))
            elif name == "d_month_y":
                y, mo, d = int(m.group(3)), _MONTH_NUM[m.group(2).lower()], int(m.group(1))
            elif name == "month_y":
                y, mo, d = int(m.group(2)), _MONTH_NUM[m.group(1).lower()], None
            else:  # slashed; skip ambiguous day/month rather than guess
                a, b, y = int(m.group(1)), int(m.group(2)), int(m.group(3))
                if a > 12 and b <= 12:
                    d, mo = a, b
                elif b > 12 and a <= 12:
                    mo, d = a, b
                else:
                    continue
            if _valid_date(y, mo, d):
                taken.append((m.start(), m.end()))
                mentions.append(_DateMention(m.start(), m.end(), y, mo, d))
    mentions.sort(key=lambda m: m.start)
    return mentions


def _render_date(mention: _DateMention, fmt: str) -> str | None:
    y, mo, d = mention.year, mention.month, mention.day
    full, abbr = _MONTHS[mo - 1], _MONTH_ABBR[mo - 1]
    if fmt == "iso":
        return f"{y:04d}-{mo:02d}-{d:02d}" if d is not None else f"{y:04d}-{mo:02d}"
    if fmt == "long":
        return f"{full} {d}, {y}" if d is not None else f"{full} {y}"
    if fmt == "abbrev":
        return f"{abbr} {d}, {y}" if d is not None else f"{abbr} {y}"
    if fmt == "day-first":
        return f"{d} {full} {y}" if d is not None else f"{full} {y}"
    if fmt == "day-first-abbrev":
        return f"{d} {abbr} {y}" if d is not None else f"{abbr} {y}"
    if fmt == "slash-dmy":
        return f"{d:02d}/{mo:02d}/{y:04d}" if d is not None else None
    if fmt == "slash-mdy":
        return f"{mo:02d}/{d:02d}/{y:04d}" if d is not None else None
    raise ValueError(f"unknown date format: {fmt!r}")


def change_date_format(text: str, target: str | None = None, rng: Rng | None = None) -> str:
    """Rewrite recognized date mentions into ``target`` format.  The denoted
    calendar date never changes; unrepresentable mentions are left alone."""
    if target is not None and target not in DATE_FORMATS:
        raise ValueError(f"unknown date format: {target!r}")
    mentions = _find_dates(text)
    if not mentions:
        return text
    out = []
    pos = 0
    for mention in mentions:
        fmt = target if target is not None else rng.choice(DATE_FORMATS)
        rendered = _render_date(mention, fmt)
        out.append(text[pos:mention.start])
        out.append(rendered if rendered is not None else text[mention.start:mention.end])
        pos = mention.end
    out.append(text[pos:])
    return "".join(out)


def parse_dates(text: str) -> list[tuple[int, int, int | None]]:
    """(year, month, day) triples of recognized mentions, in order."""
    return [(m.year, m.month, m.day) for m in _find_dates(text)]


# --- weekday / month abbreviation -------------------------------------------

_WEEKDAYS = ["Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday", "Sunday"]
_WEEKDAY_ABBR = ["Mon", "Tue", "Wed", "Thu", "Fri", "Sat", "Sun"]

_ABBREVIATE = {full: abbr for full, abbr in zip(_WEEKDAYS, _WEEKDAY_ABBR)}
_ABBREVIATE.update(
    {full: abbr for full, abbr in zip(_MONTHS, _MONTH_ABBR) if full != "May"}
)
_EXPAND = {abbr: full for full, abbr in _ABBREVIATE.items()}
_EXPAND.update({"Tues": "Tuesday", "Thur": "Thursday", "Thurs": "Thursday", "Sept": "September"})


def abbrev_weekday_month(text: str, direction: str) -> str:
    """Abbreviate or expand singular weekday/month names ("Mon." <-> "Monday").
    Plural names ("Sundays") are never touched; expanding consumes the
    abbreviation's trailing period."""
    tokens = tokenize(text)
    out = [t.text for t in tokens]
    for i, tok in enumerate(tokens):
        if tok.kind is not TokenKind.WORD:
            continue
        if direction == "abbreviate":
            if tok.text in _ABBREVIATE:
                out[i] = _ABBREVIATE[tok.text] + "."
        elif direction == "expand":
            if tok.text in _EXPAND:
                out[i] = _EXPAND[tok.text]
                if i + 1 < len(tokens) and tokens[i + 1].text == ".":
                    out[i + 1] = ""
        else:
            raise ValueError(f"unknown direction: {direction!r}")
    return "".join(out)


# --- numbers -----------------------------------------------------------------

def number_to_word(text: str) -> str:
    """Spell every Number token as English cardinal words."""
    return "".join(
        number_token_to_words(t.text) if t.kind is TokenKind.NUMBER else t.text
        for t in tokenize(text)
    )


def replace_numerical_values(text: str, rng: Rng) -> str:
    """Replace each number with a random one of the same digit shape: digit
    counts before/after the decimal point and separators are preserved."""
    out = []
    for tok in tokenize(text):
        if tok.kind is not TokenKind.NUMBER:
            out.append(tok.text)
            continue
        digit_positions = [i for i, ch in enumerate(tok.text) if ch.isdigit()]
        chars = list(tok.text)
        int_len = len(tok.text.partition(".")[0].replace(",", ""))
        for order, i in enumerate(digit_positions):
            if order == 0 and int_len > 1:
                chars[i] = str(1 + rng.below(9))
            else:
                chars[i] = str(rng.below(10))
        out.append("".join(chars))
    return "".join(out)


# --- units -------------------------------------------------------------------

@dataclass(frozen=True)
class Unit:
    id: str
    family: str
    factor_to_base: Decimal
    singular: str
    plural: str
    aliases: tuple[str, ...]


@lru_cache(maxsize=None)
def load_units(data_dir: str | None = None) -> dict[str, Unit]:
    _, rows = read_tsv(data_path("tables/units.tsv", data_dir))
    units = {}
    for unit_id, family, factor, names in rows:
        parts = names.split("|")
        units[unit_id] = Unit(
            id=unit_id,
            family=family,
            factor_to_base=Decimal(factor),
            singular=parts[0],
            plural=parts[1] if len(parts) > 1 else parts[0],
            aliases=tuple(parts),
        )
    return units


def _unit_alias_index(units: dict[str, Unit]) -> dict[str, Unit]:
    index = {}
    for unit in units.values():
        for alias in unit.aliases:
            index[alias.lower()] = unit
    return index


def _round_significant(value: Decimal, digits: int = 6) -> Decimal:
    if value == 0:
        return Decimal(0)
    quantum = Decimal(1).scaleb(value.adjusted() - digits + 1)
    return value.quantize(quantum, rounding=ROUND_HALF_UP)


def format_decimal(value: Decimal) -> str:
    text = format(value, "f")
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return text


def _decimal_to_words(value: Decimal) -> str:
    text = format_decimal(value)
    int_part, _, frac = text.partition(".")
    words = int_to_words(int(int_part))
    if frac:
        digit_words = " ".join(int_to_words(int(d)) for d in frac)
        words += " point " + digit_words
    return words


@dataclass(frozen=True)
class _QuantityMention:
    value: Decimal
    unit: Unit
    start_token: int  # token index of the first value token
    end_token: int  # token index of the unit token (inclusive)
    surface: str  # "digits" | "words"


def _find_quantities(tokens, alias_index) -> list[_QuantityMention]:
    mentions = []
    for i, tok in enumerate(tokens):
        if tok.kind is not TokenKind.WORD:
            continue
        unit = alias_index.get(tok.text.lower())
        if unit is None:
            continue
        # walk left over spaces to the value
        j = i - 1
        while j >= 0 and tokens[j].kind is TokenKind.SPACE:
            j -= 1
        if j < 0:
            continue
        if tokens[j].kind is TokenKind.NUMBER:
            value = Decimal(tokens[j].text.replace(",", ""))
            mentions.append(_QuantityMention(value, unit, j, i, "digits"))
            continue
        if tokens[j].kind is TokenKind.WORD:
            # collect a window of word tokens to the left (hyphenated number
            # words live inside single word tokens), then take the longest
            # suffix of the window that parses as one number
            window: list[tuple[int, str]] = []
            k = j
            while k >= 0 and len(window) < 12:
                if tokens[k].kind is TokenKind.SPACE:
                    k -= 1
                    continue
                if tokens[k].kind is TokenKind.WORD:
                    window.append((k, tokens[k].text))
                    k -= 1
                    continue
                break
            window.reverse()
            for start in range(len(window)):
                parser = WordNumberParser()
                if all(
                    parser.accepts(piece)
                    for _, word in window[start:]
                    for piece in word.split("-")
                ):
                    mentions.append(
                        _QuantityMention(parser.value, unit, window[start][0], i, "words")
                    )
                    break
    return mentions


def convert_value(
    value: Decimal, source_unit: str, target_unit: str, data_dir: str | None = None
) -> Decimal:
    """Exact-decimal unit conversion of a bare value (no display rounding)."""
    units = load_units(data_dir)
    try:
        src, dst = units[source_unit], units[target_unit]
    except KeyError as exc:
        raise UnknownUnitError(str(exc)) from None
    if src.family != dst.family:
        raise UnknownUnitError(f"{target_unit}: not a {src.family} unit")
    return value * src.factor_to_base / dst.factor_to_base


def convert_units(
    text: str,
    target: str | None = None,
    rng: Rng | None = None,
    data_dir: str | None = None,
) -> str:
    """Convert length/mass quantities to another unit of the same family,
    keeping the digits-or-words surface of the original value."""
    units = load_units(data_dir)
    if target is not None and target not in units:
        raise UnknownUnitError(target)
    alias_index = _unit_alias_index(units)
    tokens = tokenize(text)
    mentions = _find_quantities(tokens, alias_index)
    if not mentions:
        return text
    out = [t.text for t in tokens]
    for mention in mentions:
        if target is not None:
            if units[target].family != mention.unit.family:
                raise UnknownUnitError(
                    f"{target}: not a {mention.unit.family} unit (source {mention.unit.id})"
                )
            unit_to = units[target]
        else:
            options = sorted(
                u.id for u in units.values()
                if u.family == mention.unit.family and u.id != mention.unit.id
            )
            unit_to = units[rng.choice(options)]
        converted = _round_significant(
            mention.value * mention.unit.factor_to_base / unit_to.factor_to_base
        )
        if mention.surface == "digits":
            value_text = format_decimal(converted)
        else:
            value_text = _decimal_to_words(converted)
        unit_text = unit_to.singular if converted == 1 else unit_to.plural
        out[mention.start_token] = f"{value_text} {unit_text}"
        for j in range(mention.start_token + 1, mention.end_token + 1):
            out[j] = ""
    return "".join(out)


# --- money -------------------------------------------------------------------

@dataclass(frozen=True)
class CurrencyStyle:
    code: str
    symbol: str
    singular: str
    plural: str
    style: str  # "prefix" | "suffix"
    thousands_sep: str
    decimals: int


@lru_cache(maxsize=None)
def load_currencies(data_dir: str | None = None) -> dict[str, CurrencyStyle]:
    _, rows = read_tsv(data_path("tables/currencies.tsv", data_dir))
    out = {}
    for code, symbol, word, style, sep, decimals in rows:
        singular, _, plural = word.partition("|")
        out[code] = CurrencyStyle(
            code=code,
            symbol=symbol,
            singular=singular,
            plural=plural or singular,
            style=style,
            thousands_sep={"space": " ", "comma": ",", "none": ""}[sep],
            decimals=int(decimals),
        )
    return out


@lru_cache(maxsize=None)
def load_rates(data_dir: str | None = None) -> dict[tuple[str, str], Decimal]:
    _, rows = read_tsv(data_path("tables/rates.tsv", data_dir))
    return {(src, dst): Decimal(rate) for src, dst, rate in rows}


_AMOUNT = r"\d{1,3}(?: \d{3})+(?:\.\d+)?|\d{1,3}(?:,\d{3})+(?:\.\d+)?|\d+(?:\.\d+)?"


def _money_patterns(currencies: dict[str, CurrencyStyle]):
    by_symbol = {c.symbol: c.code for c in currencies.values()}
    words = {}
    for c in currencies.values():
        words[c.singular.lower()] = c.code
        words[c.plural.lower()] = c.code
    symbol_alt = "|".join(re.escape(s) for s in sorted(by_symbol, key=len, reverse=True))
    word_alt = "|".join(re.escape(w) for w in sorted(words, key=len, reverse=True))
    pre = re.compile(rf"(?P<sym>{symbol_alt}) ?(?P<amt>{_AMOUNT})")
    post = re.compile(
        rf"(?P<amt>{_AMOUNT}) ?(?:(?P<sym>{symbol_alt})|(?P<word>(?i:{word_alt}))\b)"
    )
    return pre, post, by_symbol, words


def _group_digits(digits: str, sep: str) -> str:
    if not sep:
        return digits
    groups = []
    while len(digits) > 3:
        groups.append(digits[-3:])
        digits = digits[:-3]
    groups.append(digits)
    return sep.join(reversed(groups))


def format_money(amount: Decimal, style: CurrencyStyle) -> str:
    quantum = Decimal(1).scaleb(-style.decimals)
    amount = amount.quantize(quantum, rounding=ROUND_HALF_UP)
    int_part, _, frac = format(amount, "f").partition(".")
    body = _group_digits(int_part, style.thousands_sep)
    if style.decimals:
        body += "." + (frac or "").ljust(style.decimals, "0")
    if style.style == "prefix":
        return f"{style.symbol} {body}"
    if style.style == "prefix_tight":
        return f"{style.symbol}{body}"
    word = style.singular if amount == 1 else style.plural
    return f"{body} {word}"


def replace_financial_amounts(
    text: str,
    target_currency: str,
    rates: dict[tuple[str, str], Decimal] | None = None,
    data_dir: str | None = None,
) -> str:
    """Convert every money mention to ``target_currency`` with one rate per
    text, rewriting amount, format, and currency marker."""
    currencies = load_currencies(data_dir)
    if target_currency not in currencies:
        raise UnknownCurrencyError(target_currency)
    if rates is None:
        rates = load_rates(data_dir)
    pre, post, by_symbol, words = _money_patterns(currencies)
    target_style = currencies[target_currency]

    def rate_for(src: str) -> Decimal:
        if src == target_currency:
            return Decimal(1)
        try:
            return rates[(src, target_currency)]
        except KeyError:
            raise UnknownCurrencyError(f"no rate {src}->{target_currency}") from None

    matches = []
    taken: list[tuple[int, int]] = []
    for pattern in (pre, post):
        for m in pattern.finditer(text):
            if any(m.start() < e and s < m.end() for s, e in taken):
                continue
            taken.append((m.start(), m.end()))
            matches.append(m)
    matches.sort(key=lambda m: m.start())
    if not matches:
        return text

    out = []
    pos = 0
    for m in matches:
        src = by_symbol[m.group("sym")] if m.group("sym") else words[m.group("word").lower()]
        amount = Decimal(m.group("amt").replace(",", "").replace(" ", ""))
        converted = amount * rate_for(src)
        out.append(text[pos:m.start()])
        out.append(format_money(converted, target_style))
        pos = m.end()
    out.append(text[pos:])
    return "".join(out)
