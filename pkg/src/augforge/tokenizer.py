"""Lossless rule-based tokenizer.

Rules: a Word is a maximal run of letters joined by internal apostrophes or
hyphens; a Number is decimal digits with optional comma-grouped thousands and
a single fractional part; whitespace runs are Space tokens; every remaining
code point is its own Punct (Unicode P*) or Other token.  Concatenating token
texts in order always reproduces the input byte for byte.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass
from enum import Enum


class TokenKind(Enum):
    WORD = "word"
    NUMBER = "number"
    SPACE = "space"
    PUNCT = "punct"
    OTHER = "other"


@dataclass(frozen=True)
class Token:
    text: str
    kind: TokenKind
    span: tuple[int, int]  # byte offsets into the UTF-8 encoding of the source

    @property
    def is_word(self) -> bool:
        return self.kind is TokenKind.WORD


_TOKEN_RE = re.compile(
    r"(?P<word>[^\W\d_]+(?:['’-][^\W\d_]+)*)"
    r"|(?P<number>\d{1,3}(?:,\d{3})+(?:\.\d+)?|\d+(?:\.\d+)?)"
    r"|(?P<space>\s+)"
    r"|(?P<other>.)",
    re.DOTALL,
)


def _classify_other(ch: str) -> TokenKind:
    return TokenKind.PUNCT if unicodedata.category(ch).startswith("P") else TokenKind.OTHER


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    byte_pos = 0
    for m in _TOKEN_RE.finditer(text):
        chunk = m.group(0)
        if m.lastgroup == "word":
            kind = TokenKind.WORD
        elif m.lastgroup == "number":
            kind = TokenKind.NUMBER
        elif m.lastgroup == "space":
            kind = TokenKind.SPACE
        else:
            kind = _classify_other(chunk)
        nbytes = len(chunk.encode("utf-8"))
        tokens.append(Token(chunk, kind, (byte_pos, byte_pos + nbytes)))
        byte_pos += nbytes
    return tokens


def detokenize(tokens: list[Token]) -> str:
    return "".join(t.text for t in tokens)


def words(text: str) -> list[str]:
    """Word-token texts, in order."""
    return [t.text for t in tokenize(text) if t.kind is TokenKind.WORD]
