"""WebSocket broadcast of the live frame stream, with a control channel.

Three stages run independently and hand immutable messages through queues:
replay ingestion, tick scheduling/analysis, and per-client broadcast.  Every
frame is serialized once and the identical string goes to every connected
client; a client joining mid-stream simply starts receiving at the next frame.
Each client gets its own bounded send queue and sender thread, so one slow
client is disconnected (with a logged reason) instead of stalling the rest.

Control messages adjust mode and font sizes for everyone.  They are validated
against the style invariants first; a rejected control produces an error
message to its sender only and leaves the configuration untouched.  Accepted
controls swap the whole (mode, config) pair, so the change lands exactly
between frames, never inside one.
"""

from __future__ import annotations

import logging
import queue
import threading
from contextlib import suppress

from websockets.exceptions import ConnectionClosed
from websockets.sync.server import Server, ServerConnection, serve as ws_serve

from . import wire
from .lexicon import Lexicon
from .replay import ReplayScript, replay
from .scheduler import (
    DEFAULT_LINGER_MS,
    DEFAULT_REFRESH_MS,
    FrameScheduler,
    StyleState,
)
from .style import Mode, StyleConfig, default_style

logger = logging.getLogger(__name__)

_SEND_QUEUE_SIZE = 32
_SENTINEL = None


class _Client:
    def __init__(self, connection: ServerConnection):
        self.connection = connection
        self.sendq: queue.Queue[str | None] = queue.Queue(maxsize=_SEND_QUEUE_SIZE)
        self.sender = threading.Thread(target=self._drain, daemon=True)
        self.sender.start()

    def _drain(self) -> None:
        while True:
            message = self.sendq.get()
            if message is _SENTINEL:
                return
            try:
                self.connection.send(message)
            except ConnectionClosed:
                return

    def offer(self, message: str) -> bool:
        """Queue a message; False means the client is too slow to keep."""
        try:
            self.sendq.put_nowait(message)
            return True
        except queue.Full:
            return False

    def stop(self) -> None:
        with suppress(queue.Full):
            self.sendq.put_nowait(_SENTINEL)


class CaptionServer:
    """Replays a script, schedules frames, and broadcasts them to clients."""

    def __init__(
        self,
        script: ReplayScript,
        *,
        mode: Mode = Mode.DYNAMIK,
        config: StyleConfig | None = None,
        scale: float = 1.0,
        refresh_ms: int = DEFAULT_REFRESH_MS,
        linger_ms: int = DEFAULT_LINGER_MS,
        lexicon: Lexicon | None = None,
        host: str = "127.0.0.1",
        port: int = 0,
    ):
        self.script = script
        self.scale = scale
        self.state = StyleState(mode, config if config is not None else default_style())
        self.scheduler = FrameScheduler(
            refresh_ms=refresh_ms, linger_ms=linger_ms, lexicon=lexicon
        )
        self.host = host
        self.port = port
        self._clients: set[_Client] = set()
        self._clients_lock = threading.Lock()
        self._stop = threading.Event()
        self._stream_done = threading.Event()
        self._server: Server | None = None
        self._threads: list[threading.Thread] = []

    # -- lifecycle ---------------------------------------------------------

    def start(self) -> int:
        """Bind and start serving; returns the bound port."""
        try:
            self._server = ws_serve(self._handle_client, self.host, self.port)
        except OSError as exc:
            raise OSError(f"cannot listen on {self.host}:{self.port}: {exc}") from exc
        self.port = self._server.socket.getsockname()[1]
        for target, name in (
            (self._server.serve_forever, "dynamik-accept"),
            (self._broadcast_loop, "dynamik-broadcast"),
        ):
            thread = threading.Thread(target=target, name=name, daemon=True)
            thread.start()
            self._threads.append(thread)
        logger.info("serving on ws://%s:%s", self.host, self.port)
        return self.port

    def stop(self) -> None:
        self._stop.set()
        if self._server is not None:
            self._server.shutdown()
        with self._clients_lock:
            clients = list(self._clients)
        for client in clients:
            client.stop()

    def serve_until_interrupted(self) -> None:
        self.start()
        try:
            while not self._stop.wait(0.2):
                pass
        except KeyboardInterrupt:
            logger.info("interrupted; shutting down")
        finally:
            self.stop()

    def wait_stream_done(self, timeout: float | None = None) -> bool:
        """Block until the frame stream has been fully broadcast."""
        return self._stream_done.wait(timeout)

    # -- stages ------------------------------------------------------------

    def _broadcast_loop(self) -> None:
        events = replay(self.script, scale=self.scale)
        if self.scale > 0:
            frames = self.scheduler.run_realtime(events, self.state, stop=self._stop)
        else:
            frames = self.scheduler.simulate(events, self.state)
        try:
            for frame in frames:
                if self._stop.is_set():
                    break
                self._broadcast(wire.encode_frame(frame))
        finally:
            self._stream_done.set()

    def _broadcast(self, message: str) -> None:
        with self._clients_lock:
            clients = list(self._clients)
        for client in clients:
            if not client.offer(message):
                logger.warning("dropping slow client %s: send queue full", client.connection.id)
                self._discard(client)
                client.stop()
                with suppress(Exception):
                    client.connection.close(code=1013, reason="too slow")

    def _discard(self, client: _Client) -> None:
        with self._clients_lock:
            self._clients.discard(client)

    def _handle_client(self, connection: ServerConnection) -> None:
        client = _Client(connection)
        with self._clients_lock:
            self._clients.add(client)
        try:
            for raw in connection:
                self._handle_message(client, raw)
        except ConnectionClosed:
            pass
        finally:
            self._discard(client)
            client.stop()

    def _handle_message(self, client: _Client, raw: str | bytes) -> None:
        try:
            payload = wire.decode_message(raw)
            control = wire.parse_control(payload)
            self._apply_control(control)
        except ValueError as exc:
            client.offer(wire.encode_error(str(exc)))

    def _apply_control(self, control: wire.ControlMsg) -> None:
        mode, config = self.state.snapshot()
        changes: dict = {}
        if control.keyword_size_pt is not None:
            changes["keyword_size_pt"] = control.keyword_size_pt
        if control.function_size_pt is not None:
            changes["function_size_pt"] = control.function_size_pt
        new_config = config.updated(**changes) if changes else config
        self.state.swap(mode=control.mode, config=new_config)
        logger.info("applied control: mode=%s config=%s", control.mode, changes or "unchanged")


def serve(
    script: ReplayScript,
    port: int,
    mode: Mode = Mode.DYNAMIK,
    *,
    scale: float = 1.0,
    config: StyleConfig | None = None,
    refresh_ms: int = DEFAULT_REFRESH_MS,
    linger_ms: int = DEFAULT_LINGER_MS,
    lexicon: Lexicon | None = None,
    host: str = "127.0.0.1",
) -> CaptionServer:
    """Start a caption server on ``port`` and return it (already running)."""
    server = CaptionServer(
        script,
        mode=mode,
        config=config,
        scale=scale,
        refresh_ms=refresh_ms,
        linger_ms=linger_ms,
        lexicon=lexicon,
        host=host,
        port=port,
    )
    server.start()
    return server
