"""Render-instruction generation for the three subtitle modes.

Normal shows every word at the keyword size; Dynamik keeps everything visible
but shrinks function words; Keyword hides function words outright.  Hidden
cues are retained with ``visible=False`` so the cue count is identical across
modes.  Punctuation never carries meaning of its own, so each punctuation cue
inherits the keyword flag of its nearest preceding word (leading punctuation
borrows from the word that follows).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Sequence

from .classify import ClassifiedToken
from .tokenizer import TokenKind

DEFAULT_KEYWORD_SIZE_PT = 18.0
DEFAULT_FUNCTION_SIZE_PT = 12.0
DEFAULT_TEXT_RGBA = (255, 128, 130, 255)
DEFAULT_BACKGROUND_RGBA = (0, 0, 0, 255)
DEFAULT_TYPEFACE = "ZenMaruGothic Medium"


class Mode(Enum):
    NORMAL = "normal"
    KEYWORD = "keyword"
    DYNAMIK = "dynamik"

    @classmethod
    def parse(cls, name: str) -> "Mode":
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown mode {name!r}; expected normal, keyword, or dynamik")


def _check_rgba(value: tuple[int, int, int, int], label: str) -> None:
    if len(value) != 4 or any(not (0 <= int(c) <= 255) for c in value):
        raise ValueError(f"{label} must be four channels in [0, 255], got {value!r}")


@dataclass(frozen=True)
class StyleConfig:
    """Immutable styling parameters; safe to share across threads."""

    keyword_size_pt: float = DEFAULT_KEYWORD_SIZE_PT
    function_size_pt: float = DEFAULT_FUNCTION_SIZE_PT
    color_rgba: tuple[int, int, int, int] = DEFAULT_TEXT_RGBA
    background_rgba: tuple[int, int, int, int] = DEFAULT_BACKGROUND_RGBA
    typeface_name: str = DEFAULT_TYPEFACE

    def __post_init__(self) -> None:
        if self.keyword_size_pt <= 0 or self.function_size_pt <= 0:
            raise ValueError("font sizes must be positive")
        if self.function_size_pt > self.keyword_size_pt:
            raise ValueError(
                f"function size {self.function_size_pt} exceeds keyword size {self.keyword_size_pt}"
            )
        _check_rgba(self.color_rgba, "color_rgba")
        _check_rgba(self.background_rgba, "background_rgba")

    @property
    def size_ratio(self) -> float:
        return self.function_size_pt / self.keyword_size_pt

    def updated(self, **changes) -> "StyleConfig":
        return replace(self, **changes)


def default_style() -> StyleConfig:
    return StyleConfig()


@dataclass(frozen=True)
class Cue:
    text: str
    size_pt: float
    visible: bool
    is_keyword: bool


@dataclass(frozen=True)
class StyledFrame:
    seq: int
    t_ms: int
    mode: Mode
    cues: tuple[Cue, ...]
    overrun: bool = False
    analysis_ms: float = field(default=0.0, compare=False)

    def visible_texts(self) -> list[str]:
        return [cue.text for cue in self.cues if cue.visible]


def _keyword_flags(tokens: Sequence[ClassifiedToken]) -> list[bool]:
    """Per-cue keyword flags with punctuation inheriting its neighbor's flag."""
    flags: list[bool] = []
    last_word_flag: bool | None = None
    pending_punct: list[int] = []
    for token in tokens:
        if token.token.kind is TokenKind.PUNCTUATION:
            if last_word_flag is None:
                pending_punct.append(len(flags))
                flags.append(False)
            else:
                flags.append(last_word_flag)
            continue
        flags.append(token.is_keyword)
        last_word_flag = token.is_keyword
        for i in pending_punct:
            flags[i] = token.is_keyword
        pending_punct.clear()
    return flags


def apply_mode(
    tokens: Sequence[ClassifiedToken], mode: Mode, config: StyleConfig | None = None
) -> tuple[Cue, ...]:
    """Build one cue per token under ``mode``; pure and order-preserving."""
    cfg = config if config is not None else default_style()
    flags = _keyword_flags(tokens)
    cues = []
    for token, keywordish in zip(tokens, flags):
        if mode is Mode.NORMAL:
            size, visible = cfg.keyword_size_pt, True
        elif mode is Mode.DYNAMIK:
            size = cfg.keyword_size_pt if keywordish else cfg.function_size_pt
            visible = True
        else:  # Mode.KEYWORD
            size = cfg.keyword_size_pt if keywordish else cfg.function_size_pt
            visible = keywordish
        cues.append(Cue(text=token.surface, size_pt=size, visible=visible, is_keyword=keywordish))
    return tuple(cues)
