"""Real-time keyword-emphasis subtitling.

Streaming English text is split into content words (keywords) and function
words, then rendered in one of three modes: Normal (uniform size), Keyword
(function words hidden), or Dynamik (function words shrunk).  The package
covers the full path from raw or replayed recognition hypotheses through
classification, styling, fixed-cadence frame scheduling, WebSocket broadcast,
density/area metrics, and WebVTT/ASS export.
"""

from .classify import (
    ClassifiedToken,
    ContentKind,
    LexiconTagger,
    Tagger,
    WordClass,
    WordFamily,
    classify_tokens,
)
from .export import parse_ass, parse_webvtt, to_ass, to_webvtt
from .lexicon import (
    FunctionKind,
    Lexicon,
    LexiconError,
    default_lexicon,
    is_negative,
    load_lexicon,
)
from .metrics import DensityReport, DensityUndefinedError, area_ratio, density_report
from .replay import (
    HypothesisEvent,
    ReplayScript,
    ReplayScriptError,
    load_script,
    parse_replay_script,
    replay,
    script_from_text,
    script_to_json,
    split_sentences,
)
from .scheduler import FrameScheduler, StyleState, schedule_frames
from .server import CaptionServer, serve
from .style import Cue, Mode, StyleConfig, StyledFrame, apply_mode, default_style
from .tokenizer import StreamTokenizer, Token, TokenKind, tokenize, tokenize_stream

__version__ = "0.1.0"

__all__ = [
    "CaptionServer",
    "ClassifiedToken",
    "ContentKind",
    "Cue",
    "DensityReport",
    "DensityUndefinedError",
    "FrameScheduler",
    "FunctionKind",
    "HypothesisEvent",
    "Lexicon",
    "LexiconError",
    "LexiconTagger",
    "Mode",
    "ReplayScript",
    "ReplayScriptError",
    "StreamTokenizer",
    "StyleConfig",
    "StyleState",
    "StyledFrame",
    "Tagger",
    "Token",
    "TokenKind",
    "WordClass",
    "WordFamily",
    "apply_mode",
    "area_ratio",
    "classify_tokens",
    "default_lexicon",
    "default_style",
    "density_report",
    "is_negative",
    "load_lexicon",
    "load_script",
    "parse_ass",
    "parse_replay_script",
    "parse_webvtt",
    "replay",
    "schedule_frames",
    "script_from_text",
    "script_to_json",
    "serve",
    "split_sentences",
    "to_ass",
    "to_webvtt",
    "tokenize",
    "tokenize_stream",
]
