"""Word/numeral/punctuation tokenization with stable character spans.

The rules are deliberately locale-free and deterministic: letters, digits,
apostrophes, and internal hyphens bind; everything else separates.  Contractions
("don't") and hyphenated words stay single tokens; digit-grouping commas and
decimal points bind inside numerals ("600,000", "3.5"); symbols such as "%" or
"/" are standalone punctuation tokens.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator


class TokenKind(Enum):
    WORD = "word"
    NUMERAL = "numeral"
    PUNCTUATION = "punctuation"


@dataclass(frozen=True)
class Token:
    """A surface unit with its (start, end) offsets into the source text."""

    surface: str
    span: tuple[int, int]
    kind: TokenKind
    time_ms: int | None = None

    @property
    def is_word_like(self) -> bool:
        return self.kind is not TokenKind.PUNCTUATION


# Digit-led forms, optionally with digit-grouping commas / decimal points and a
# letter suffix ("5th", "60s").  Word forms bind internal apostrophes/hyphens.
_NUMERAL_PAT = r"\d+(?:[.,]\d+)*[^\W\d_]*"
_WORD_PAT = r"[^\W\d_]+(?:['’’-][^\W\d_]+)*"
_TOKEN_RE = re.compile(rf"{_NUMERAL_PAT}|{_WORD_PAT}|\S", re.UNICODE)

# Characters that may glue a token to text that has not arrived yet; everything
# else (whitespace included) definitively closes the token before it.  The
# word-character test must complement the token patterns exactly, so it uses
# the same regex classes rather than str.isalpha/isdigit (which disagree with
# `\w` on numerics like "½").
_BINDING_CHARS = frozenset("'’-,.")
_TOKEN_CHAR_RE = re.compile(r"[^\W_]", re.UNICODE)


def _kind(surface: str) -> TokenKind:
    if surface[0].isdigit():
        return TokenKind.NUMERAL
    if any(ch.isalpha() or ch.isdigit() for ch in surface):
        return TokenKind.WORD
    return TokenKind.PUNCTUATION


def tokenize(text: str, *, time_ms: int | None = None, base_offset: int = 0) -> list[Token]:
    """Split ``text`` into tokens with non-overlapping, strictly increasing spans.

    Empty input yields an empty list.  ``base_offset`` shifts spans, which lets
    streaming callers report offsets into the whole stream.
    """
    return [
        Token(
            surface=m.group(),
            span=(m.start() + base_offset, m.end() + base_offset),
            kind=_kind(m.group()),
            time_ms=time_ms,
        )
        for m in _TOKEN_RE.finditer(text)
    ]


class StreamTokenizer:
    """Incremental tokenizer that withholds a possibly-incomplete tail.

    Fragments may split words arbitrarily; a token is emitted only once its
    right boundary is sealed by whitespace or non-binding punctuation, or when
    :meth:`flush` is called.  Across any fragmentation of the same text, the
    emitted tokens equal ``tokenize(whole_text)``.

    One instance per ingestion stream; instances are not thread-safe.
    """

    def __init__(self) -> None:
        self._pending = ""
        self._offset = 0  # stream offset of the first pending character

    @property
    def pending(self) -> str:
        """The unconfirmed tail, if any."""
        return self._pending

    def feed(self, chunk: str, *, time_ms: int | None = None) -> list[Token]:
        self._pending += chunk
        cut = self._safe_cut(self._pending)
        if cut == 0:
            return []
        ready, self._pending = self._pending[:cut], self._pending[cut:]
        tokens = tokenize(ready, time_ms=time_ms, base_offset=self._offset)
        self._offset += cut
        return tokens

    def flush(self, *, time_ms: int | None = None) -> list[Token]:
        tokens = tokenize(self._pending, time_ms=time_ms, base_offset=self._offset)
        self._offset += len(self._pending)
        self._pending = ""
        return tokens

    @staticmethod
    def _safe_cut(buffer: str) -> int:
        """Index after the rightmost character that cannot bind rightward."""
        for i in range(len(buffer) - 1, -1, -1):
            ch = buffer[i]
            if _TOKEN_CHAR_RE.match(ch) is None and ch not in _BINDING_CHARS:
                return i + 1
        return 0


def tokenize_stream(chunks: Iterable[str]) -> Iterator[Token]:
    """Tokenize ordered text fragments, flushing the tail at end of input."""
    stream = StreamTokenizer()
    for chunk in chunks:
        yield from stream.feed(chunk)
    yield from stream.flush()
