"""Lexical density and display-area estimation.

Lexical density is the share of content words among word and numeral tokens
(punctuation is excluded).  The display-area estimate answers how much of the
full-size rendering survives once function words are shrunk to ``size_ratio``
of the keyword size:

    area = (1 - function_fraction) + function_fraction * size_ratio ** exponent

With the default 12pt/18pt sizes and the typical ~40% function-word share,
the linear (width) reading gives about 0.87 of the original length while the
quadratic (glyph-area) reading gives about 0.78.  The figure often quoted for
this kind of reduction, "about 80%", sits between the two readings, so both
exponents are computed and reported rather than silently picking one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .classify import ClassifiedToken, WordFamily
from .style import StyleConfig, default_style


class DensityUndefinedError(ValueError):
    """Raised when a text has no word tokens: density 0/0 is not a number."""


def area_ratio(function_fraction: float, size_ratio: float, exponent: int) -> float:
    """Estimated footprint relative to uniform full-size rendering.

    ``exponent`` 1 treats the shrink as one-dimensional (text length), 2 as
    two-dimensional (glyph area).  Decreasing in ``function_fraction``,
    increasing in ``size_ratio``; equals 1.0 when there is nothing to shrink.
    """
    if not 0.0 <= function_fraction <= 1.0:
        raise ValueError(f"function_fraction must be in [0, 1], got {function_fraction!r}")
    if not 0.0 < size_ratio <= 1.0:
        raise ValueError(f"size_ratio must be in (0, 1], got {size_ratio!r}")
    if exponent not in (1, 2):
        raise ValueError(f"exponent must be 1 or 2, got {exponent!r}")
    return (1.0 - function_fraction) + function_fraction * size_ratio**exponent


@dataclass(frozen=True)
class DensityReport:
    total_words: int
    content_words: int
    function_words: int
    lexical_density_pct: float
    area_ratio_linear: float
    area_ratio_quadratic: float

    def to_dict(self) -> dict:
        return {
            "total_words": self.total_words,
            "content_words": self.content_words,
            "function_words": self.function_words,
            "lexical_density_pct": self.lexical_density_pct,
            "area_ratio_linear": self.area_ratio_linear,
            "area_ratio_quadratic": self.area_ratio_quadratic,
        }


def density_report(
    tokens: Sequence[ClassifiedToken],
    config: StyleConfig | None = None,
    *,
    size_ratio: float | None = None,
) -> DensityReport:
    """Count word classes and estimate the display-area ratio.

    Only word and numeral tokens count; density is stored at full precision
    (round at presentation, not here).  ``size_ratio`` overrides the ratio
    implied by ``config`` when supplied.
    """
    cfg = config if config is not None else default_style()
    ratio = size_ratio if size_ratio is not None else cfg.size_ratio
    content = sum(
        1
        for t in tokens
        if t.token.is_word_like and t.word_class.family is WordFamily.CONTENT
    )
    function = sum(
        1
        for t in tokens
        if t.token.is_word_like and t.word_class.family is WordFamily.FUNCTION
    )
    total = content + function
    if total == 0:
        raise DensityUndefinedError("no word tokens: lexical density is undefined")
    function_fraction = function / total
    return DensityReport(
        total_words=total,
        content_words=content,
        function_words=function,
        lexical_density_pct=100.0 * content / total,
        area_ratio_linear=area_ratio(function_fraction, ratio, 1),
        area_ratio_quadratic=area_ratio(function_fraction, ratio, 2),
    )
