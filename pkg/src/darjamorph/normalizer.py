"""Tokenization and exaggeration collapsing for social-media messages."""

from __future__ import annotations

import re
from dataclasses import dataclass, replace

_WORD_CHARS = frozenset("abcdefghijklmnopqrstuvwxyz0123456789'")
_LETTER_RE = re.compile(r"[a-z]")
# three or more of the same character
_RUN_RE = re.compile(r"(.)\1{2,}", re.DOTALL)


@dataclass(frozen=True)
class RawMessage:
    message_id: int
    text: str


@dataclass(frozen=True)
class Token:
    message_id: int
    token_index: int
    surface: str
    candidates: tuple[str, ...]
    exaggerated: bool = False

    @property
    def normalized(self) -> str:
        return self.candidates[0]


def _is_word_char(ch: str) -> bool:
    return ch.lower() in _WORD_CHARS


def _strip_punct(fragment: str) -> str:
    start, end = 0, len(fragment)
    while start < end and not _is_word_char(fragment[start]):
        start += 1
    while end > start and not _is_word_char(fragment[end - 1]):
        end -= 1
    return fragment[start:end]


def tokenize_message(msg: RawMessage) -> list[Token]:
    """Split on whitespace and trim punctuation from both ends of each word.

    Digits and apostrophes count as word characters (``ch7al``, ``ma3kom``).
    Fragments without any letter are dropped.
    """
    tokens = []
    for fragment in msg.text.split():
        surface = _strip_punct(fragment)
        lowered = surface.lower()
        if not _LETTER_RE.search(lowered):
            continue
        tokens.append(Token(msg.message_id, len(tokens), surface, (lowered,)))
    return tokens


def collapse_exaggeration(token: Token) -> Token:
    """Fill candidates by shrinking every run of 3+ identical characters.

    The first candidate keeps two copies of each run (dialect words are
    often geminated: ``bezzaf``), the second keeps one.
    """
    lowered = token.surface.lower()
    if not _RUN_RE.search(lowered):
        return replace(token, candidates=(lowered,), exaggerated=False)
    doubled = _RUN_RE.sub(r"\1\1", lowered)
    single = _RUN_RE.sub(r"\1", lowered)
    candidates = tuple(dict.fromkeys((doubled, single)))
    return replace(token, candidates=candidates, exaggerated=True)


def normalize_message(msg: RawMessage) -> list[Token]:
    return [collapse_exaggeration(t) for t in tokenize_message(msg)]
