"""Fixed-cadence frame emission over a hypothesis stream.

Every refresh tick (default 500 ms) the latest hypothesis of the active
utterance is fully re-tokenized, re-classified, and re-styled into one
StyledFrame.  Re-analyzing from scratch each tick keeps frames internally
consistent and makes final-hypothesis stability automatic: once an utterance
is final, its cue texts cannot change.  A finalized utterance lingers on
screen for ``linger_ms`` and then clears; while nothing is displayable, no
frames are emitted.

Two execution modes share the same tick logic: virtual time (driven purely by
event timestamps, used for tests and batch output) and real time (wall-clock
paced, used by the live server).  Style settings are read once per tick from a
:class:`StyleState`, whose (mode, config) pair is only ever replaced
wholesale, so every frame reflects exactly one setting pair.
"""

from __future__ import annotations

import queue
import threading
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .classify import Tagger, classify_tokens
from .lexicon import Lexicon, default_lexicon
from .replay import HypothesisEvent
from .style import Mode, StyleConfig, StyledFrame, apply_mode, default_style
from .tokenizer import tokenize

DEFAULT_REFRESH_MS = 500
DEFAULT_LINGER_MS = 2000


class StyleState:
    """Holder for the live (mode, config) pair; swapped atomically, never mutated."""

    def __init__(self, mode: Mode, config: StyleConfig | None = None):
        self._snapshot = (mode, config if config is not None else default_style())

    def snapshot(self) -> tuple[Mode, StyleConfig]:
        return self._snapshot

    def swap(self, mode: Mode | None = None, config: StyleConfig | None = None) -> None:
        current_mode, current_config = self._snapshot
        self._snapshot = (mode or current_mode, config or current_config)


@dataclass
class _Display:
    """What the subtitle surface is currently showing."""

    text: str = ""
    final_at_ms: int | None = None
    live: bool = False

    def update(self, event: HypothesisEvent) -> None:
        self.text = event.text
        self.live = True
        self.final_at_ms = event.t_ms if event.is_final else None

    def showable_at(self, t_ms: int, linger_ms: int) -> bool:
        if not self.live:
            return False
        if self.final_at_ms is not None and t_ms > self.final_at_ms + linger_ms:
            self.live = False
            return False
        return True


class FrameScheduler:
    def __init__(
        self,
        *,
        refresh_ms: int = DEFAULT_REFRESH_MS,
        linger_ms: int = DEFAULT_LINGER_MS,
        lexicon: Lexicon | None = None,
        tagger: Tagger | None = None,
    ):
        if refresh_ms <= 0:
            raise ValueError("refresh_ms must be positive")
        self.refresh_ms = refresh_ms
        self.linger_ms = linger_ms
        self.lexicon = lexicon if lexicon is not None else default_lexicon()
        self.tagger = tagger

    def _analyze(
        self, display: _Display, state: StyleState, seq: int, t_ms: int
    ) -> StyledFrame:
        mode, config = state.snapshot()
        started = time.perf_counter()
        tokens = tokenize(display.text, time_ms=t_ms)
        classified = classify_tokens(tokens, self.lexicon, tagger=self.tagger)
        cues = apply_mode(classified, mode, config)
        analysis_ms = (time.perf_counter() - started) * 1000.0
        return StyledFrame(
            seq=seq,
            t_ms=t_ms,
            mode=mode,
            cues=cues,
            overrun=analysis_ms > self.refresh_ms,
            analysis_ms=analysis_ms,
        )

    def simulate(
        self, events: Iterable[HypothesisEvent], state: StyleState
    ) -> Iterator[StyledFrame]:
        """Virtual-time run: ticks are driven by event timestamps alone.

        A tick at time T reflects the latest event with ``t_ms <= T``; ticks
        with nothing displayable emit no frame.
        """
        display = _Display()
        next_tick = self.refresh_ms
        seq = 0
        for event in events:
            while next_tick < event.t_ms:
                if display.showable_at(next_tick, self.linger_ms):
                    seq += 1
                    yield self._analyze(display, state, seq, next_tick)
                next_tick += self.refresh_ms
            display.update(event)
        while display.showable_at(next_tick, self.linger_ms):
            seq += 1
            yield self._analyze(display, state, seq, next_tick)
            next_tick += self.refresh_ms

    def run_realtime(
        self,
        events: Iterable[HypothesisEvent],
        state: StyleState,
        *,
        clock: Callable[[], float] = time.monotonic,
        sleep: Callable[[float], None] = time.sleep,
        stop: threading.Event | None = None,
    ) -> Iterator[StyledFrame]:
        """Wall-clock run: ingestion happens on a side thread, ticks here.

        The events iterable may block (live replay sleeps between hypotheses);
        it is drained into a queue so tick timing never depends on it.  Frames
        are emitted late rather than dropped when analysis overruns the tick;
        the overrun flag makes that observable.
        """
        feed: queue.Queue[HypothesisEvent | None] = queue.Queue()

        def ingest() -> None:
            try:
                for event in events:
                    feed.put(event)
            finally:
                feed.put(None)

        ingestion = threading.Thread(target=ingest, name="dynamik-ingest", daemon=True)
        ingestion.start()

        display = _Display()
        start = clock()
        seq = 0
        tick_index = 0
        exhausted = False
        while not (stop is not None and stop.is_set()):
            tick_index += 1
            tick_ms = tick_index * self.refresh_ms
            target = start + tick_ms / 1000.0
            while True:
                remaining = target - clock()
                if remaining <= 0:
                    break
                sleep(min(remaining, 0.05))
            while True:
                try:
                    event = feed.get_nowait()
                except queue.Empty:
                    break
                if event is None:
                    exhausted = True
                    break
                display.update(event)
            if display.showable_at(tick_ms, self.linger_ms):
                seq += 1
                yield self._analyze(display, state, seq, tick_ms)
            elif exhausted:
                return


def schedule_frames(
    events: Iterable[HypothesisEvent],
    mode: Mode = Mode.DYNAMIK,
    config: StyleConfig | None = None,
    refresh_ms: int = DEFAULT_REFRESH_MS,
    *,
    linger_ms: int = DEFAULT_LINGER_MS,
    lexicon: Lexicon | None = None,
    tagger: Tagger | None = None,
    realtime: bool = False,
    state: StyleState | None = None,
) -> Iterator[StyledFrame]:
    """Turn a hypothesis stream into styled frames on the refresh cadence.

    Pass a shared ``state`` to steer mode/config while the stream is running;
    otherwise one is created from ``mode`` and ``config``.
    """
    scheduler = FrameScheduler(
        refresh_ms=refresh_ms, linger_ms=linger_ms, lexicon=lexicon, tagger=tagger
    )
    if state is None:
        state = StyleState(mode, config)
    if realtime:
        return scheduler.run_realtime(events, state)
    return scheduler.simulate(events, state)
