"""Word/phrase-level perturbations driven by bundled lexicons, plus
insertion/deletion noise."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import UnknownLexiconError
from .resources import data_path, read_tsv
from .rng import Rng
from .tokenizer import Token, TokenKind, tokenize

MAX_PHRASE_TOKENS = 5


@dataclass(frozen=True)
class Lexicon:
    """Phrase substitution table with whole-token, longest-match semantics.

    Keys are 1..5 word tokens joined by single spaces, lowercase.
    """

    name: str
    entries: dict[str, tuple[str, ...]]
    direction_pair: str | None = None

    def validate(self) -> None:
        for key, candidates in self.entries.items():
            if not key:
                raise ValueError(f"{self.name}: empty key")
            if len(key.split(" ")) > MAX_PHRASE_TOKENS:
                raise ValueError(f"{self.name}: key longer than {MAX_PHRASE_TOKENS} tokens: {key!r}")
            if not candidates or any(not c for c in candidates):
                raise ValueError(f"{self.name}: empty candidate for {key!r}")

    @property
    def max_key_tokens(self) -> int:
        return max((len(k.split(" ")) for k in self.entries), default=1)


@lru_cache(maxsize=None)
def load_lexicon(name: str, data_dir: str | None = None) -> Lexicon:
    try:
        path = data_path(f"lexicons/{name}.tsv", data_dir)
    except FileNotFoundError:
        raise UnknownLexiconError(name) from None
    directives, rows = read_tsv(path)
    entries = {key.lower(): tuple(cands.split("|")) for key, cands in rows}
    lexicon = Lexicon(name=name, entries=entries, direction_pair=directives.get("inverse"))
    lexicon.validate()
    return lexicon


def _transfer_case(source: str, candidate: str) -> str:
    if source.isupper() and len(source) > 1:
        return candidate.upper()
    if source[:1].isupper():
        return candidate[:1].upper() + candidate[1:]
    return candidate


def lexicon_substitute(text: str, lexicon: Lexicon, p: float, rng: Rng) -> str:
    """Longest-match scan over word tokens; each match independently replaced
    with probability ``p``.  Tokens outside matched spans are untouched."""
    tokens = tokenize(text)
    word_positions = [i for i, t in enumerate(tokens) if t.kind is TokenKind.WORD]
    max_len = min(lexicon.max_key_tokens, MAX_PHRASE_TOKENS)

    out = [t.text for t in tokens]
    wi = 0
    while wi < len(word_positions):
        match_len = 0
        match_key = None
        for length in range(min(max_len, len(word_positions) - wi), 0, -1):
            # phrase keys never span sentence punctuation, only spaces
            first, last = word_positions[wi], word_positions[wi + length - 1]
            if any(
                tokens[j].kind not in (TokenKind.WORD, TokenKind.SPACE)
                for j in range(first, last + 1)
            ):
                continue
            key = " ".join(tokens[word_positions[wi + k]].text for k in range(length)).lower()
            if key in lexicon.entries:
                match_len, match_key = length, key
                break
        if match_key is None:
            wi += 1
            continue
        if rng.random() < p:
            candidates = lexicon.entries[match_key]
            candidate = candidates[0] if len(candidates) == 1 else rng.choice(candidates)
            first, last = word_positions[wi], word_positions[wi + match_len - 1]
            source_text = "".join(tokens[j].text for j in range(first, last + 1))
            out[first] = _transfer_case(source_text, candidate)
            for j in range(first + 1, last + 1):
                out[j] = ""
        wi += match_len
    return "".join(out)


class _OneRng:
    """Stand-in rng for deterministic (p=1, single-candidate) substitutions."""

    def random(self) -> float:
        return 0.0


def correct_misspellings(text: str) -> str:
    """Deterministic spell-repair from the bundled corrections list.
    Idempotent: corrections are never themselves misspelling keys."""
    lexicon = load_lexicon("misspelling_corrections")
    return lexicon_substitute(text, lexicon, 1.0, _OneRng())


DEFAULT_FILLERS = ("um", "uh", "erm", "ah", "er")


def insert_fillers(
    text: str,
    fillers: tuple[str, ...],
    p: float,
    rng: Rng,
    min_insertions: int = 1,
) -> str:
    """Insert filler words between words with probability ``p``; at least
    ``min_insertions`` fillers are always inserted."""
    if not fillers:
        raise ValueError("fillers must be nonempty")
    tokens = tokenize(text)
    word_positions = [i for i, t in enumerate(tokens) if t.kind is TokenKind.WORD]
    # gap g sits just after word g (before the next word)
    gaps = list(range(len(word_positions) - 1))
    chosen: dict[int, str] = {}
    for gap in gaps:
        if rng.random() < p:
            chosen[gap] = rng.choice(fillers)
    while len(chosen) < min_insertions:
        if gaps:
            free = [g for g in gaps if g not in chosen]
            if not free:
                break
            chosen[rng.choice(free)] = rng.choice(fillers)
        elif word_positions:
            # single-word text: prepend before the only word
            filler = rng.choice(fillers)
            idx = word_positions[0]
            return "".join(
                (filler + " " + t.text) if i == idx else t.text for i, t in enumerate(tokens)
            )
        else:
            break
    out = []
    for i, tok in enumerate(tokens):
        out.append(tok.text)
        if tok.kind is TokenKind.WORD:
            gap = word_positions.index(i)
            if gap in chosen:
                out.append(" " + chosen[gap])
    return "".join(out)


def random_word_deletion(text: str, p: float, rng: Rng) -> str:
    """Delete each word with probability ``p``, collapsing the whitespace that
    followed it.  Surviving words are a subsequence of the input words."""
    tokens = tokenize(text)
    keep = [True] * len(tokens)
    for i, tok in enumerate(tokens):
        if tok.kind is TokenKind.WORD and rng.random() < p:
            keep[i] = False
            if i + 1 < len(tokens) and tokens[i + 1].kind is TokenKind.SPACE and keep[i + 1]:
                keep[i + 1] = False
            else:
                j = i - 1
                while j >= 0 and not keep[j]:
                    j -= 1
                if j >= 0 and tokens[j].kind is TokenKind.SPACE:
                    keep[j] = False
    return "".join(t.text for i, t in enumerate(tokens) if keep[i])


def hashtagify(text: str, k: int, rng: Rng) -> str:
    """Append ``k`` hashtags built from 1-2 words of the text (CamelCase)."""
    if k <= 0:
        return text
    word_texts = [t.text for t in tokenize(text) if t.kind is TokenKind.WORD]
    if not word_texts:
        return text
    tags = []
    for _ in range(k):
        n = 1 if len(word_texts) == 1 else 1 + rng.below(2)
        picked = [rng.choice(word_texts) for _ in range(n)]
        tags.append("#" + "".join(w.lower().capitalize() for w in picked))
    return text + " " + " ".join(tags)


@lru_cache(maxsize=None)
def _emoticon_table(data_dir: str | None = None) -> dict[str, str]:
    _, rows = read_tsv(data_path("lexicons/emoticons.tsv", data_dir))
    return {emoticon: emoji for emoticon, emoji in rows}


def emoji_icon(text: str, direction: str) -> str:
    """direction: "to-emoji" rewrites ASCII emoticons as emoji;
    "to-ascii" does the inverse."""
    table = _emoticon_table()
    if direction == "to-emoji":
        mapping = table
    elif direction == "to-ascii":
        mapping = {v: k for k, v in table.items()}
    else:
        raise ValueError(f"unknown direction: {direction!r}")
    keys = sorted(mapping, key=len, reverse=True)
    out = []
    i = 0
    while i < len(text):
        for key in keys:
            if text.startswith(key, i):
                out.append(mapping[key])
                i += len(key)
                break
        else:
            out.append(text[i])
            i += 1
    return "".join(out)
