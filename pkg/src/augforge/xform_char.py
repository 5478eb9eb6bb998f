"""Character-level perturbations: keyboard noise, substitution-table attacks,
case/whitespace noise, and simple ciphers."""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from functools import lru_cache

from .errors import UnknownMapError
from .resources import data_path, read_tsv
from .rng import Rng
from .tokenizer import Token, TokenKind, detokenize, tokenize


@dataclass(frozen=True)
class CharMap:
    """Substitution table from a code point to candidate replacements."""

    name: str
    entries: dict[str, tuple[str, ...]]
    bidirectional: bool = False

    def validate(self) -> None:
        for src, candidates in self.entries.items():
            if len(src) != 1:
                raise ValueError(f"{self.name}: source {src!r} is not one code point")
            if not candidates:
                raise ValueError(f"{self.name}: empty candidate list for {src!r}")
        if self.bidirectional:
            for candidates in self.entries.values():
                for cand in candidates:
                    if cand not in self.entries:
                        raise ValueError(
                            f"{self.name}: bidirectional but {cand!r} has no reverse entry"
                        )


@dataclass(frozen=True)
class KeyboardLayout:
    name: str
    adjacency: dict[str, frozenset[str]]

    def validate(self) -> None:
        for key, neighbors in self.adjacency.items():
            if key in neighbors:
                raise ValueError(f"{self.name}: {key!r} is its own neighbor")
            for n in neighbors:
                if key not in self.adjacency.get(n, frozenset()):
                    raise ValueError(f"{self.name}: adjacency not symmetric for {key!r}/{n!r}")


@lru_cache(maxsize=None)
def load_charmap(name: str, data_dir: str | None = None) -> CharMap:
    try:
        path = data_path(f"charmaps/{name}.tsv", data_dir)
    except FileNotFoundError:
        raise UnknownMapError(name) from None
    directives, rows = read_tsv(path)
    entries = {src: tuple(cands.split("|")) for src, cands in rows}
    cmap = CharMap(
        name=name,
        entries=entries,
        bidirectional=directives.get("bidirectional", "").lower() == "true",
    )
    cmap.validate()
    return cmap


@lru_cache(maxsize=None)
def load_keyboard(name: str, data_dir: str | None = None) -> KeyboardLayout:
    path = data_path(f"keyboards/{name.lower()}.tsv", data_dir)
    _, rows = read_tsv(path)
    layout = KeyboardLayout(
        name=name.upper(),
        adjacency={key: frozenset(neighbors) for key, neighbors in rows},
    )
    layout.validate()
    return layout


def butter_fingers(text: str, p: float, layout: KeyboardLayout, rng: Rng) -> str:
    """Replace letters with keyboard neighbors, each independently with
    probability ``p``.  Uppercase letters get uppercased replacements."""
    out = []
    for ch in text:
        lower = ch.lower()
        neighbors = layout.adjacency.get(lower)
        if not ch.isalpha() or not neighbors or rng.random() >= p:
            out.append(ch)
            continue
        repl = rng.choice(sorted(neighbors))
        if ch.isupper():
            repl = repl.upper()
        out.append(repl)
    return "".join(out)


def char_substitute(text: str, cmap: CharMap, p: float, rng: Rng) -> str:
    out = []
    for ch in text:
        candidates = cmap.entries.get(ch)
        if candidates is None or rng.random() >= p:
            out.append(ch)
        else:
            out.append(rng.choice(candidates))
    return "".join(out)


def swap_adjacent_chars(text: str, p: float, rng: Rng) -> str:
    """Swap adjacent character pairs inside words, each eligible
    (non-overlapping) pair with probability ``p``."""
    tokens = tokenize(text)
    out = []
    for tok in tokens:
        if tok.kind is not TokenKind.WORD or len(tok.text) < 2:
            out.append(tok.text)
            continue
        chars = list(tok.text)
        i = 0
        while i < len(chars) - 1:
            if rng.random() < p:
                chars[i], chars[i + 1] = chars[i + 1], chars[i]
                i += 2
            else:
                i += 1
        out.append("".join(chars))
    return "".join(out)


def _flipped(ch: str) -> str | None:
    # Only flip when the result is a single code point that round-trips, so
    # length and lowercase equality are preserved (skips ß, ı, µ, ...).
    if ch.isupper():
        flip = ch.lower()
    elif ch.islower():
        flip = ch.upper()
    else:
        return None
    if len(flip) == 1 and flip != ch and flip.lower() == ch.lower():
        return flip
    return None


def change_char_case(text: str, p: float, rng: Rng) -> str:
    out = []
    for ch in text:
        flip = _flipped(ch)
        if flip is not None and rng.random() < p:
            out.append(flip)
        else:
            out.append(ch)
    return "".join(out)


def random_upper(text: str, p: float, rng: Rng) -> str:
    out = []
    for ch in text:
        flip = _flipped(ch) if ch.islower() else None
        if flip is not None and rng.random() < p:
            out.append(flip)
        else:
            out.append(ch)
    return "".join(out)


def whitespace_perturb(text: str, p_add: float, p_remove: float, rng: Rng) -> str:
    out = []
    for ch in text:
        if ch == " ":
            if rng.random() >= p_remove:
                out.append(ch)
        else:
            out.append(ch)
            if rng.random() < p_add:
                out.append(" ")
    return "".join(out)


def underscore_trick(text: str, p: float, rng: Rng) -> str:
    return "".join(
        "_" if ch == " " and rng.random() < p else ch for ch in text
    )


CIPHER_MODES = (
    "double-chars",
    "double-words",
    "space-chars",
    "reverse-text",
    "reverse-word-chars",
    "reverse-word-order",
    "homoglyph",
    "rot13",
)


def _rot13_char(ch: str) -> str:
    if "a" <= ch <= "z":
        return chr((ord(ch) - ord("a") + 13) % 26 + ord("a"))
    if "A" <= ch <= "Z":
        return chr((ord(ch) - ord("A") + 13) % 26 + ord("A"))
    return ch


def _reverse_word_order(tokens: list[Token]) -> str:
    word_texts = [t.text for t in tokens if t.kind is TokenKind.WORD]
    word_texts.reverse()
    out, w = [], iter(word_texts)
    for tok in tokens:
        out.append(next(w) if tok.kind is TokenKind.WORD else tok.text)
    return "".join(out)


def simple_cipher(text: str, mode: str) -> str:
    if mode == "double-chars":
        return "".join(ch * 2 for ch in text)
    if mode == "double-words":
        return "".join(
            f"{t.text} {t.text}" if t.kind is TokenKind.WORD else t.text
            for t in tokenize(text)
        )
    if mode == "space-chars":
        return " ".join(text)
    if mode == "reverse-text":
        return text[::-1]
    if mode == "reverse-word-chars":
        return "".join(
            t.text[::-1] if t.kind is TokenKind.WORD else t.text for t in tokenize(text)
        )
    if mode == "reverse-word-order":
        return _reverse_word_order(tokenize(text))
    if mode == "homoglyph":
        cmap = load_charmap("homoglyph")
        return "".join(cmap.entries.get(ch, (ch,))[0] for ch in text)
    if mode == "rot13":
        return "".join(_rot13_char(ch) for ch in text)
    raise ValueError(f"unknown cipher mode: {mode!r}")


_VOWELS = "aeiou"


def _pig_latin_word(word: str) -> str:
    lower = word.lower()
    cluster_end = 0
    for i, ch in enumerate(lower):
        if ch in _VOWELS or (ch == "y" and i > 0):
            cluster_end = i
            break
    else:
        cluster_end = len(lower)
    if cluster_end == 0:
        result = lower + "way"
    else:
        result = lower[cluster_end:] + lower[:cluster_end] + "ay"
    if word[0].isupper():
        result = result[:1].upper() + result[1:]
    return result


def pig_latin(text: str) -> str:
    """Move each word's leading consonant cluster to the end plus "ay";
    vowel-initial words take "way".  Initial capitals migrate."""
    return "".join(
        _pig_latin_word(t.text) if t.kind is TokenKind.WORD else t.text
        for t in tokenize(text)
    )


def diacritic_strip(text: str) -> str:
    decomposed = unicodedata.normalize("NFD", text)
    stripped = "".join(ch for ch in decomposed if not unicodedata.combining(ch))
    return unicodedata.normalize("NFC", stripped)
