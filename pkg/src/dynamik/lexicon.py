"""Closed-class word lexicon driving function-word detection.

The lexicon maps lowercase surface forms to a closed-class subkind
(determiner, preposition, conjunction, pronoun, auxiliary, particle,
interjection, other) and carries a separate set of negation forms.  Negatives
never appear among the entries: negation outranks closed-class membership, so
forms like "not" or "n't" are kept apart and always classify as keywords.

File format (UTF-8, one item per line)::

    # comment
    the<TAB>determiner
    of<TAB>preposition
    [negatives]
    not
    never

A ``[negatives]`` header switches the file to the negatives section, where
lines carry a bare surface form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import Mapping


class FunctionKind(Enum):
    DETERMINER = "determiner"
    PREPOSITION = "preposition"
    CONJUNCTION = "conjunction"
    PRONOUN = "pronoun"
    AUXILIARY = "auxiliary"
    PARTICLE = "particle"
    INTERJECTION = "interjection"
    OTHER_CLOSED = "other"


_KIND_BY_NAME = {kind.value: kind for kind in FunctionKind}

# Listed negation forms; contracted negations are matched by the "n't" clitic
# rule in is_negative() and therefore never need enumerating.
DEFAULT_NEGATIVES = frozenset(
    {"no", "not", "never", "n't", "nothing", "none", "neither", "nor", "nobody", "nowhere"}
)

_DATA_PACKAGE = "dynamik.data"
_DEFAULT_RESOURCE = "function_words.lex"


class LexiconError(ValueError):
    """Raised for malformed lexicon files; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def _normalize(surface: str) -> str:
    return surface.lower().replace("’", "'")


def is_negative(surface: str, negatives: frozenset[str] = DEFAULT_NEGATIVES) -> bool:
    """True for listed negation forms and for words ending in the n't clitic."""
    form = _normalize(surface)
    return form in negatives or form.endswith("n't")


@dataclass(frozen=True)
class Lexicon:
    entries: Mapping[str, FunctionKind]
    negatives: frozenset[str] = field(default=DEFAULT_NEGATIVES)

    def __post_init__(self) -> None:
        overlap = set(self.entries) & set(self.negatives)
        if overlap:
            raise LexiconError(f"entries overlap negatives: {sorted(overlap)}")

    def lookup(self, surface: str) -> FunctionKind | None:
        """Case-insensitive closed-class lookup; None for open-class words."""
        return self.entries.get(_normalize(surface))

    def is_negative(self, surface: str) -> bool:
        return is_negative(surface, self.negatives)

    def __len__(self) -> int:
        return len(self.entries)


def parse_lexicon(text: str) -> Lexicon:
    entries: dict[str, FunctionKind] = {}
    negatives: set[str] = set()
    in_negatives = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line == "[negatives]":
            in_negatives = True
            continue
        if line.startswith("[") and line.endswith("]"):
            raise LexiconError(f"unknown section {line!r}", lineno)
        if in_negatives:
            form = _normalize(line)
            if "\t" in form:
                raise LexiconError("negatives lines carry a bare surface form", lineno)
            negatives.add(form)
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise LexiconError("expected 'surface<TAB>subkind'", lineno)
        surface, kind_name = _normalize(parts[0].strip()), parts[1].strip().lower()
        if not surface:
            raise LexiconError("empty surface form", lineno)
        if kind_name not in _KIND_BY_NAME:
            raise LexiconError(f"unknown subkind {kind_name!r}", lineno)
        if surface in entries:
            raise LexiconError(f"duplicate entry {surface!r}", lineno)
        entries[surface] = _KIND_BY_NAME[kind_name]
    clash = set(entries) & negatives
    if clash:
        raise LexiconError(f"entries also listed as negatives: {sorted(clash)}")
    return Lexicon(entries=entries, negatives=frozenset(negatives) or DEFAULT_NEGATIVES)


def load_lexicon(source: str | Path | None = None) -> Lexicon:
    """Load a lexicon file, or the packaged default when ``source`` is None."""
    if source is None:
        text = resources.files(_DATA_PACKAGE).joinpath(_DEFAULT_RESOURCE).read_text("utf-8")
    else:
        text = Path(source).read_text("utf-8")
    return parse_lexicon(text)


_default: Lexicon | None = None


def default_lexicon() -> Lexicon:
    """The embedded English closed-class lexicon (cached; immutable)."""
    global _default
    if _default is None:
        _default = load_lexicon(None)
    return _default
