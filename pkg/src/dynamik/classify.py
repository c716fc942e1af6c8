"""Content/function word classification and keyword flagging.

Nouns, verbs, adjectives, adverbs, numerals, and negation forms are content
words (keywords); closed-class grammatical words resolved through the lexicon
are function words.  Classification is deterministic: it depends only on the
token sequence and the lexicon.  The default route is lexicon-first with
open-class suffix heuristics; a statistical tagger can be plugged in through
the :class:`Tagger` seam without changing the surrounding pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Protocol, Sequence

from .lexicon import FunctionKind, Lexicon, default_lexicon, is_negative
from .tokenizer import Token, TokenKind


class WordFamily(Enum):
    CONTENT = "content"
    FUNCTION = "function"
    PUNCT = "punct"


class ContentKind(Enum):
    NOUN = "noun"
    PROPER_NOUN = "proper_noun"
    VERB = "verb"
    ADJECTIVE = "adjective"
    ADVERB = "adverb"
    NEGATIVE = "negative"
    NUMERAL = "numeral"


@dataclass(frozen=True)
class WordClass:
    family: WordFamily
    subkind: ContentKind | FunctionKind | None

    def __post_init__(self) -> None:
        if self.family is WordFamily.PUNCT:
            if self.subkind is not None:
                raise ValueError("punctuation carries no subkind")
        elif self.family is WordFamily.CONTENT:
            if not isinstance(self.subkind, ContentKind):
                raise ValueError("content words need a ContentKind subkind")
        elif not isinstance(self.subkind, FunctionKind):
            raise ValueError("function words need a FunctionKind subkind")


@dataclass(frozen=True)
class ClassifiedToken:
    token: Token
    word_class: WordClass
    is_keyword: bool

    @property
    def surface(self) -> str:
        return self.token.surface


PUNCT_CLASS = WordClass(WordFamily.PUNCT, None)
NEGATIVE_CLASS = WordClass(WordFamily.CONTENT, ContentKind.NEGATIVE)


class Tagger(Protocol):
    """Pluggable word-class assigner for non-punctuation tokens.

    Implementations return one WordClass per input token.  Negation dominance
    and punctuation handling are enforced by :func:`classify_tokens` on top of
    whatever the tagger returns.
    """

    def tag(self, tokens: Sequence[Token]) -> Sequence[WordClass]: ...


# Spelled-out numbers classify as numerals so quantity words stay keywords.
_NUMBER_WORDS = frozenset(
    """zero one two three four five six seven eight nine ten eleven twelve
    thirteen fourteen fifteen sixteen seventeen eighteen nineteen twenty thirty
    forty fifty sixty seventy eighty ninety hundred thousand million billion
    trillion first third fourth fifth sixth seventh eighth ninth tenth""".split()
)

_TERMINAL_PUNCT = frozenset(".!?")


def _suffix_subkind(surface: str) -> ContentKind:
    lowered = surface.lower()
    if lowered.endswith("ly") and len(lowered) >= 4:
        return ContentKind.ADVERB
    if len(lowered) >= 5 and lowered.endswith(("ing", "ed", "ize", "ise", "ify")):
        return ContentKind.VERB
    if lowered.endswith(("ous", "ful", "ive", "able", "ible", "ish", "est")) and len(lowered) >= 5:
        return ContentKind.ADJECTIVE
    return ContentKind.NOUN


class LexiconTagger:
    """Default deterministic tagger: negation, lexicon, numerals, heuristics."""

    def __init__(self, lexicon: Lexicon | None = None):
        self.lexicon = lexicon if lexicon is not None else default_lexicon()

    def tag(self, tokens: Sequence[Token]) -> list[WordClass]:
        classes: list[WordClass] = []
        sentence_initial = True
        for token in tokens:
            if token.kind is TokenKind.PUNCTUATION:
                classes.append(PUNCT_CLASS)
                if token.surface in _TERMINAL_PUNCT:
                    sentence_initial = True
                continue
            classes.append(self._tag_word(token, sentence_initial))
            sentence_initial = False
        return classes

    def _tag_word(self, token: Token, sentence_initial: bool) -> WordClass:
        surface = token.surface
        if self.lexicon.is_negative(surface):
            return NEGATIVE_CLASS
        # All-caps forms of two or more letters are acronyms ("WHO", "UNICEF"),
        # not the closed-class homographs they would otherwise hit.
        if surface.isupper() and len(surface) >= 2:
            return WordClass(WordFamily.CONTENT, ContentKind.PROPER_NOUN)
        kind = self.lexicon.lookup(surface)
        if kind is not None:
            return WordClass(WordFamily.FUNCTION, kind)
        if token.kind is TokenKind.NUMERAL or surface.lower() in _NUMBER_WORDS:
            return WordClass(WordFamily.CONTENT, ContentKind.NUMERAL)
        if surface[0].isupper() and not sentence_initial:
            return WordClass(WordFamily.CONTENT, ContentKind.PROPER_NOUN)
        return WordClass(WordFamily.CONTENT, _suffix_subkind(surface))


def classify_tokens(
    tokens: Sequence[Token],
    lexicon: Lexicon | None = None,
    *,
    tagger: Tagger | None = None,
) -> list[ClassifiedToken]:
    """Classify every token, preserving order and count.

    Invariants enforced here regardless of the tagger in use: punctuation is
    never a keyword, negation forms are always keywords, and the keyword flag
    equals content-family membership.
    """
    lexicon = lexicon if lexicon is not None else default_lexicon()
    tagger = tagger if tagger is not None else LexiconTagger(lexicon)
    classes = tagger.tag(tokens)
    if len(classes) != len(tokens):
        raise ValueError("tagger returned a class count different from the token count")
    classified: list[ClassifiedToken] = []
    for token, word_class in zip(tokens, classes):
        if token.kind is TokenKind.PUNCTUATION:
            word_class = PUNCT_CLASS
        elif lexicon.is_negative(token.surface):
            word_class = NEGATIVE_CLASS
        classified.append(
            ClassifiedToken(
                token=token,
                word_class=word_class,
                is_keyword=word_class.family is WordFamily.CONTENT,
            )
        )
    return classified
