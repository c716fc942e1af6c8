"""Subtitle file export: WebVTT with per-word cue classes, ASS with inline
font-size overrides.

Both writers take a frame list ordered by strictly increasing ``t_ms``; each
frame becomes one cue/dialogue event lasting until the next frame (the last
one lasts ``linger_ms``).  Hidden cues are omitted from the text.  Word size
classes survive a round trip: ``parse_webvtt``/``parse_ass`` are deliberately
written against the file formats, not against the writers, and recover the
visible words with their size classes.

SRT is intentionally not offered: it cannot express per-word sizing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .style import Cue, StyleConfig, StyledFrame, default_style

KEYWORD_CLASS = "keyword"
FUNCTION_CLASS = "func"

_WORDLIKE_RE = re.compile(r"[^\W_]", re.UNICODE)


@dataclass(frozen=True)
class ParsedCue:
    start_ms: int
    end_ms: int
    words: tuple[tuple[str, str], ...]  # (text, size class) pairs


def _check_order(frames: Sequence[StyledFrame]) -> None:
    for earlier, later in zip(frames, frames[1:]):
        if later.t_ms <= earlier.t_ms:
            raise ValueError(
                f"frames must be ordered by t_ms: {later.t_ms} follows {earlier.t_ms}"
            )


def _cue_class(cue: Cue) -> str:
    return KEYWORD_CLASS if cue.is_keyword else FUNCTION_CLASS


def _is_punctuation(text: str) -> bool:
    return _WORDLIKE_RE.search(text) is None


def _frame_spans(frames: Sequence[StyledFrame], linger_ms: int) -> list[tuple[int, int]]:
    spans = []
    for i, frame in enumerate(frames):
        end = frames[i + 1].t_ms if i + 1 < len(frames) else frame.t_ms + linger_ms
        spans.append((frame.t_ms, end))
    return spans


# --- WebVTT -----------------------------------------------------------------


def _vtt_timestamp(ms: int) -> str:
    hours, rest = divmod(ms, 3_600_000)
    minutes, rest = divmod(rest, 60_000)
    seconds, millis = divmod(rest, 1000)
    return f"{hours:02d}:{minutes:02d}:{seconds:02d}.{millis:03d}"


def to_webvtt(
    frames: Sequence[StyledFrame],
    config: StyleConfig | None = None,
    *,
    linger_ms: int = 2000,
) -> str:
    cfg = config if config is not None else default_style()
    _check_order(frames)
    lines = [
        "WEBVTT",
        "",
        "NOTE",
        f"keyword_size_pt={cfg.keyword_size_pt:g} function_size_pt={cfg.function_size_pt:g} "
        f"color_rgba={','.join(str(c) for c in cfg.color_rgba)} typeface={cfg.typeface_name}",
        "",
    ]
    for frame, (start, end) in zip(frames, _frame_spans(frames, linger_ms)):
        lines.append(str(frame.seq))
        lines.append(f"{_vtt_timestamp(start)} --> {_vtt_timestamp(end)}")
        lines.append(_vtt_cue_text(frame))
        lines.append("")
    return "\n".join(lines)


def _vtt_cue_text(frame: StyledFrame) -> str:
    parts: list[str] = []
    for cue in frame.cues:
        if not cue.visible:
            continue
        tagged = f"<c.{_cue_class(cue)}>{cue.text}</c>"
        if parts and not _is_punctuation(cue.text):
            parts.append(" ")
        parts.append(tagged)
    return "".join(parts)


_VTT_TS_RE = re.compile(r"(\d{2,}):(\d{2}):(\d{2})\.(\d{3})")
_VTT_TAG_RE = re.compile(r"<c\.([A-Za-z0-9_-]+)>(.*?)</c>")


def _parse_vtt_ts(text: str) -> int:
    m = _VTT_TS_RE.fullmatch(text.strip())
    if m is None:
        raise ValueError(f"bad WebVTT timestamp {text!r}")
    h, mnt, s, ms = (int(g) for g in m.groups())
    return ((h * 60 + mnt) * 60 + s) * 1000 + ms


def parse_webvtt(document: str) -> list[ParsedCue]:
    """Strict re-reader for the subset of WebVTT this package writes."""
    blocks = [b for b in re.split(r"\n{2,}", document.strip()) if b.strip()]
    if not blocks or not blocks[0].startswith("WEBVTT"):
        raise ValueError("missing WEBVTT header")
    cues: list[ParsedCue] = []
    for block in blocks[1:]:
        lines = block.splitlines()
        if lines[0].startswith("NOTE") or lines[0].startswith("STYLE"):
            continue
        timing_idx = next((i for i, l in enumerate(lines) if "-->" in l), None)
        if timing_idx is None:
            raise ValueError(f"cue block without timing line: {block!r}")
        start_s, _, end_s = lines[timing_idx].partition("-->")
        payload = "\n".join(lines[timing_idx + 1 :])
        stripped = _VTT_TAG_RE.sub("", payload)
        if stripped.strip():
            raise ValueError(f"cue text outside class tags: {stripped.strip()!r}")
        words = tuple((m.group(2), m.group(1)) for m in _VTT_TAG_RE.finditer(payload))
        cues.append(
            ParsedCue(start_ms=_parse_vtt_ts(start_s), end_ms=_parse_vtt_ts(end_s), words=words)
        )
    return cues


# --- ASS ---------------------------------------------------------------------


def _ass_timestamp(ms: int) -> str:
    hours, rest = divmod(ms, 3_600_000)
    minutes, rest = divmod(rest, 60_000)
    seconds, centis = divmod(rest, 1000)
    return f"{hours}:{minutes:02d}:{seconds:02d}.{centis // 10:02d}"


def _ass_color(rgba: tuple[int, int, int, int]) -> str:
    r, g, b, a = rgba
    return f"&H{255 - a:02X}{b:02X}{g:02X}{r:02X}"


_ASS_STYLE_FORMAT = (
    "Name, Fontname, Fontsize, PrimaryColour, SecondaryColour, OutlineColour, "
    "BackColour, Bold, Italic, Underline, StrikeOut, ScaleX, ScaleY, Spacing, "
    "Angle, BorderStyle, Outline, Shadow, Alignment, MarginL, MarginR, MarginV, Encoding"
)
_ASS_EVENT_FORMAT = "Layer, Start, End, Style, Name, MarginL, MarginR, MarginV, Effect, Text"


def _size_token(size_pt: float) -> str:
    return f"{size_pt:g}"


def to_ass(
    frames: Sequence[StyledFrame],
    config: StyleConfig | None = None,
    *,
    linger_ms: int = 2000,
) -> str:
    cfg = config if config is not None else default_style()
    _check_order(frames)
    primary = _ass_color(cfg.color_rgba)
    back = _ass_color(cfg.background_rgba)
    lines = [
        "[Script Info]",
        "Title: dynamik captions",
        "ScriptType: v4.00+",
        "PlayResX: 1280",
        "PlayResY: 720",
        "",
        "[V4+ Styles]",
        f"Format: {_ASS_STYLE_FORMAT}",
        f"Style: Default,{cfg.typeface_name},{_size_token(cfg.keyword_size_pt)},{primary},"
        f"{primary},{back},{back},0,0,0,0,100,100,0,0,1,1,0,2,10,10,10,1",
        "",
        "[Events]",
        f"Format: {_ASS_EVENT_FORMAT}",
    ]
    for frame, (start, end) in zip(frames, _frame_spans(frames, linger_ms)):
        text = _ass_event_text(frame)
        lines.append(
            f"Dialogue: 0,{_ass_timestamp(start)},{_ass_timestamp(end)},Default,,0,0,0,,{text}"
        )
    lines.append("")
    return "\n".join(lines)


def _ass_event_text(frame: StyledFrame) -> str:
    parts: list[str] = []
    current_size: float | None = None
    for cue in frame.cues:
        if not cue.visible:
            continue
        if parts and not _is_punctuation(cue.text):
            parts.append(" ")
        if cue.size_pt != current_size:
            parts.append(f"{{\\fs{_size_token(cue.size_pt)}}}")
            current_size = cue.size_pt
        parts.append(cue.text)
    return "".join(parts)


def glued_words(cues: Sequence[Cue]) -> list[tuple[str, float]]:
    """Visible cue texts with punctuation glued to its word, plus sizes.

    This mirrors how the ASS writer lays text out, so it is the comparison
    unit for ASS round trips.
    """
    words: list[tuple[str, float]] = []
    for cue in cues:
        if not cue.visible:
            continue
        if words and _is_punctuation(cue.text):
            text, size = words[-1]
            words[-1] = (text + cue.text, size)
        else:
            words.append((cue.text, cue.size_pt))
    return words


_ASS_TS_RE = re.compile(r"(\d+):(\d{2}):(\d{2})\.(\d{2})")
_ASS_FS_RE = re.compile(r"\{\\fs([0-9.]+)\}")


def _parse_ass_ts(text: str) -> int:
    m = _ASS_TS_RE.fullmatch(text.strip())
    if m is None:
        raise ValueError(f"bad ASS timestamp {text!r}")
    h, mnt, s, cs = (int(g) for g in m.groups())
    return ((h * 60 + mnt) * 60 + s) * 1000 + cs * 10


def parse_ass(document: str) -> list[ParsedCue]:
    """Re-reader for ASS dialogue events with inline \\fs size overrides.

    Words are whitespace-separated chunks inside each size run; the size class
    is the run's font size rendered with ``%g``.
    """
    lines = document.splitlines()
    if "[Script Info]" not in {l.strip() for l in lines}:
        raise ValueError("missing [Script Info] section")
    event_format: list[str] | None = None
    in_events = False
    cues: list[ParsedCue] = []
    for line in lines:
        stripped = line.strip()
        if stripped.startswith("["):
            in_events = stripped == "[Events]"
            continue
        if not in_events or not stripped:
            continue
        key, _, rest = stripped.partition(":")
        if key == "Format":
            event_format = [field.strip() for field in rest.split(",")]
            continue
        if key != "Dialogue":
            continue
        if event_format is None:
            raise ValueError("Dialogue before Format line")
        fields = rest.lstrip().split(",", len(event_format) - 1)
        if len(fields) != len(event_format):
            raise ValueError(f"malformed Dialogue line: {stripped!r}")
        record = dict(zip(event_format, fields))
        words: list[tuple[str, str]] = []
        pieces = _ASS_FS_RE.split(record["Text"])
        if pieces[0].strip():
            raise ValueError(f"dialogue text before first size override: {pieces[0]!r}")
        for size_token, run in zip(pieces[1::2], pieces[2::2]):
            for chunk in run.split():
                words.append((chunk, size_token))
        cues.append(
            ParsedCue(
                start_ms=_parse_ass_ts(record["Start"]),
                end_ms=_parse_ass_ts(record["End"]),
                words=tuple(words),
            )
        )
    return cues
