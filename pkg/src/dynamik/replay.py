"""Timed replay of recognition hypotheses, standing in for a live ASR feed.

A replay script is a JSON document ``{"name": ..., "events": [{"t_ms": ...,
"text": ..., "is_final": ...}, ...]}``.  Each event carries the full current
hypothesis for the active utterance; an ``is_final`` event closes the
utterance.  Scripts can be replayed at any time scale; scale 0 delivers all
events immediately, which keeps tests and batch runs fast.
"""

from __future__ import annotations

import json
import re
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterator


@dataclass(frozen=True)
class HypothesisEvent:
    t_ms: int
    text: str
    is_final: bool


@dataclass(frozen=True)
class ReplayScript:
    name: str
    events: tuple[HypothesisEvent, ...]

    def utterances(self) -> list[list[HypothesisEvent]]:
        """Group events into utterances; each group ends with its final event."""
        groups: list[list[HypothesisEvent]] = []
        current: list[HypothesisEvent] = []
        for event in self.events:
            current.append(event)
            if event.is_final:
                groups.append(current)
                current = []
        if current:
            groups.append(current)
        return groups


class ReplayScriptError(ValueError):
    """Schema or ordering violation; carries the offending event index."""

    def __init__(self, message: str, index: int | None = None):
        self.index = index
        if index is not None:
            message = f"event {index}: {message}"
        super().__init__(message)


def parse_replay_script(document: str | dict) -> ReplayScript:
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise ReplayScriptError(f"not valid JSON: {exc}") from exc
    if not isinstance(document, dict):
        raise ReplayScriptError("script document must be a JSON object")
    name = document.get("name")
    raw_events = document.get("events")
    if not isinstance(name, str):
        raise ReplayScriptError("missing or non-string 'name'")
    if not isinstance(raw_events, list):
        raise ReplayScriptError("missing or non-list 'events'")
    events: list[HypothesisEvent] = []
    previous_ms = -1
    for i, raw in enumerate(raw_events):
        if not isinstance(raw, dict):
            raise ReplayScriptError("event must be an object", i)
        try:
            t_ms, text, is_final = raw["t_ms"], raw["text"], raw["is_final"]
        except KeyError as exc:
            raise ReplayScriptError(f"missing field {exc.args[0]!r}", i) from exc
        if not isinstance(t_ms, int) or isinstance(t_ms, bool) or t_ms < 0:
            raise ReplayScriptError("'t_ms' must be a nonnegative integer", i)
        if not isinstance(text, str) or not text:
            raise ReplayScriptError("'text' must be a nonempty string", i)
        if not isinstance(is_final, bool):
            raise ReplayScriptError("'is_final' must be a boolean", i)
        if t_ms < previous_ms:
            raise ReplayScriptError(f"t_ms {t_ms} is earlier than preceding event", i)
        previous_ms = t_ms
        events.append(HypothesisEvent(t_ms=t_ms, text=text, is_final=is_final))
    if events and not events[-1].is_final:
        raise ReplayScriptError("last event must close its utterance (is_final)", len(events) - 1)
    return ReplayScript(name=name, events=tuple(events))


def load_script(path: str | Path) -> ReplayScript:
    return parse_replay_script(Path(path).read_text("utf-8"))


def script_to_json(script: ReplayScript) -> str:
    return json.dumps(
        {
            "name": script.name,
            "events": [
                {"t_ms": e.t_ms, "text": e.text, "is_final": e.is_final} for e in script.events
            ],
        },
        ensure_ascii=False,
        indent=2,
    )


_SENTENCE_RE = re.compile(r"[^.!?]*[.!?]+|[^.!?]+$")


def split_sentences(text: str) -> list[str]:
    """Greedy split on terminal punctuation; keeps the punctuation attached."""
    return [chunk.strip() for chunk in _SENTENCE_RE.findall(text) if chunk.strip()]


def script_from_text(
    name: str,
    text: str,
    *,
    ms_per_word: int = 300,
    start_ms: int = 0,
    by_sentence: bool = False,
) -> ReplayScript:
    """Pace a transcript into growing partial hypotheses, one word per beat.

    By default the whole transcript is one utterance, so the closing event
    carries the full (whitespace-normalized) text.  With ``by_sentence`` each
    sentence becomes its own utterance, which resembles how a recognizer
    finalizes speech segment by segment.
    """
    if ms_per_word < 0:
        raise ValueError("ms_per_word must be nonnegative")
    units = split_sentences(text) if by_sentence else [" ".join(text.split())]
    events: list[HypothesisEvent] = []
    clock = start_ms
    for unit in units:
        words = unit.split()
        for n in range(1, len(words) + 1):
            final = n == len(words)
            events.append(
                HypothesisEvent(t_ms=clock, text=" ".join(words[:n]), is_final=final)
            )
            clock += ms_per_word
    return ReplayScript(name=name, events=tuple(events))


def replay(
    script: ReplayScript,
    *,
    scale: float = 1.0,
    clock: Callable[[], float] = time.monotonic,
    sleep: Callable[[float], None] = time.sleep,
) -> Iterator[HypothesisEvent]:
    """Yield events at their scaled timestamps; scale 0 yields immediately."""
    if scale < 0:
        raise ValueError("scale must be nonnegative")
    start = clock()
    for event in script.events:
        if scale > 0:
            target = start + (event.t_ms * scale) / 1000.0
            while True:
                remaining = target - clock()
                if remaining <= 0:
                    break
                sleep(remaining)
        yield event
