"""scikit-learn compatible wrappers around the analysis pipeline.

Each stage of text -> tokens -> word classes -> styled cues (or density
reports) is exposed as a transformer with ``fit``/``transform``/``get_params``
so the pieces compose with sklearn ``Pipeline`` and parameter search:

    >>> pipe = make_caption_pipeline(mode="keyword")
    >>> pipe.fit_transform(["the gunman fled"])  # doctest: +SKIP

Transformers operate on lists of documents: one input text (or token list)
per element, one output list per element.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.pipeline import Pipeline
from sklearn.utils.validation import check_is_fitted

from .classify import ClassifiedToken, classify_tokens
from .lexicon import Lexicon, default_lexicon, load_lexicon
from .metrics import DensityReport, density_report
from .style import Cue, Mode, StyleConfig, apply_mode
from .tokenizer import Token, tokenize


def _check_documents(X: Iterable, kind: type, label: str) -> list:
    documents = list(X)
    for i, doc in enumerate(documents):
        if isinstance(doc, str):
            continue
        if isinstance(doc, Sequence) and all(isinstance(item, kind) for item in doc):
            continue
        raise TypeError(
            f"{label} expects strings or sequences of {kind.__name__}; "
            f"element {i} is {type(doc).__name__}"
        )
    return documents


class TextTokenizer(BaseEstimator, TransformerMixin):
    """Stateless: list of texts -> list of token lists."""

    def fit(self, X=None, y=None):
        return self

    def transform(self, X) -> list[list[Token]]:
        documents = list(X)
        for i, doc in enumerate(documents):
            if not isinstance(doc, str):
                raise TypeError(f"TextTokenizer expects strings; element {i} is {type(doc).__name__}")
        return [tokenize(doc) for doc in documents]


class WordClassifier(BaseEstimator, TransformerMixin):
    """Lexicon-backed content/function classifier.

    ``fit`` binds the lexicon (from ``lexicon_path`` or the embedded default);
    ``transform`` accepts raw strings or pre-tokenized documents.
    """

    def __init__(self, lexicon_path: str | None = None):
        self.lexicon_path = lexicon_path

    def fit(self, X=None, y=None):
        self.lexicon_: Lexicon = (
            load_lexicon(self.lexicon_path) if self.lexicon_path else default_lexicon()
        )
        return self

    def transform(self, X) -> list[list[ClassifiedToken]]:
        check_is_fitted(self, "lexicon_")
        documents = _check_documents(X, Token, "WordClassifier")
        out = []
        for doc in documents:
            tokens = tokenize(doc) if isinstance(doc, str) else list(doc)
            out.append(classify_tokens(tokens, self.lexicon_))
        return out


class SubtitleStyler(BaseEstimator, TransformerMixin):
    """Classified token lists -> cue lists under the configured mode."""

    def __init__(
        self,
        mode: str = "dynamik",
        keyword_size_pt: float = 18.0,
        function_size_pt: float = 12.0,
    ):
        self.mode = mode
        self.keyword_size_pt = keyword_size_pt
        self.function_size_pt = function_size_pt

    def fit(self, X=None, y=None):
        self.mode_ = Mode.parse(self.mode)
        self.config_ = StyleConfig(
            keyword_size_pt=self.keyword_size_pt, function_size_pt=self.function_size_pt
        )
        return self

    def transform(self, X) -> list[tuple[Cue, ...]]:
        check_is_fitted(self, "mode_")
        documents = _check_documents(X, ClassifiedToken, "SubtitleStyler")
        return [apply_mode(doc, self.mode_, self.config_) for doc in documents]


class DensityReporter(BaseEstimator, TransformerMixin):
    """Classified token lists -> per-document density reports."""

    def __init__(self, size_ratio: float | None = None):
        self.size_ratio = size_ratio

    def fit(self, X=None, y=None):
        return self

    def transform(self, X) -> list[DensityReport]:
        documents = _check_documents(X, ClassifiedToken, "DensityReporter")
        return [density_report(doc, size_ratio=self.size_ratio) for doc in documents]


def make_caption_pipeline(
    mode: str = "dynamik",
    *,
    lexicon_path: str | None = None,
    keyword_size_pt: float = 18.0,
    function_size_pt: float = 12.0,
) -> Pipeline:
    """Text in, styled cues out, as a standard sklearn Pipeline."""
    return Pipeline(
        [
            ("tokenize", TextTokenizer()),
            ("classify", WordClassifier(lexicon_path=lexicon_path)),
            (
                "style",
                SubtitleStyler(
                    mode=mode,
                    keyword_size_pt=keyword_size_pt,
                    function_size_pt=function_size_pt,
                ),
            ),
        ]
    )
