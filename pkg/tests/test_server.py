import json
import threading
import time

import pytest
from websockets.sync.client import connect

from dynamik.replay import script_from_text
from dynamik.server import CaptionServer, _Client
from dynamik.style import Mode
from dynamik.wire import decode_message


@pytest.fixture
def running_server():
    script = script_from_text(
        "demo", "Police say the gunman fled. The story was fake news online.", ms_per_word=60
    )
    server = CaptionServer(script, mode=Mode.DYNAMIK, scale=1.0, refresh_ms=150, linger_ms=300)
    port = server.start()
    yield server, port
    server.stop()


def recv_json(client, timeout=5):
    return json.loads(client.recv(timeout=timeout))


class TestBroadcast:
    def test_two_clients_receive_byte_identical_frames(self, running_server):
        _, port = running_server
        with connect(f"ws://127.0.0.1:{port}") as c1, connect(f"ws://127.0.0.1:{port}") as c2:
            first = c1.recv(timeout=5)
            second = c2.recv(timeout=5)
            assert first == second
            assert decode_message(first)["type"] == "frame"

    def test_midstream_client_gets_next_frame_onward(self, running_server):
        _, port = running_server
        with connect(f"ws://127.0.0.1:{port}") as early:
            first_seq = recv_json(early)["seq"]
            recv_json(early)
            with connect(f"ws://127.0.0.1:{port}") as late:
                late_msg = recv_json(late)
                assert late_msg["seq"] > first_seq
                following = recv_json(late)
                assert following["seq"] == late_msg["seq"] + 1

    def test_frames_seq_strictly_increasing(self, running_server):
        _, port = running_server
        with connect(f"ws://127.0.0.1:{port}") as client:
            seqs = [recv_json(client)["seq"] for _ in range(4)]
        assert all(b == a + 1 for a, b in zip(seqs, seqs[1:]))


class TestControl:
    def test_mode_switch_applies_to_later_frames_only(self, running_server):
        _, port = running_server
        with connect(f"ws://127.0.0.1:{port}") as client:
            assert recv_json(client)["mode"] == "dynamik"
            client.send(json.dumps({"type": "control", "mode": "keyword"}))
            modes = []
            for _ in range(12):
                msg = recv_json(client)
                if msg["type"] != "frame":
                    continue
                modes.append(msg["mode"])
                if msg["mode"] == "keyword":
                    break
            assert modes[-1] == "keyword"
            switch = modes.index("keyword")
            assert all(m == "dynamik" for m in modes[:switch])

    def test_invalid_control_rejected_config_unchanged(self, running_server):
        server, port = running_server
        with connect(f"ws://127.0.0.1:{port}") as client:
            before_mode, before_config = server.state.snapshot()
            client.send(json.dumps({"type": "control", "function_size_pt": 99}))
            saw_error = False
            for _ in range(12):
                msg = recv_json(client)
                if msg["type"] == "error":
                    saw_error = True
                    break
            assert saw_error
            after_mode, after_config = server.state.snapshot()
            assert after_config == before_config

    def test_error_goes_to_sender_only(self, running_server):
        _, port = running_server
        with connect(f"ws://127.0.0.1:{port}") as sender, connect(f"ws://127.0.0.1:{port}") as other:
            sender.send("not json at all")
            got_error = False
            for _ in range(12):
                msg = recv_json(sender)
                if msg["type"] == "error":
                    got_error = True
                    break
            assert got_error
            for _ in range(6):
                assert recv_json(other)["type"] == "frame"

    def test_empty_control_rejected(self, running_server):
        _, port = running_server
        with connect(f"ws://127.0.0.1:{port}") as client:
            client.send(json.dumps({"type": "control"}))
            for _ in range(12):
                msg = recv_json(client)
                if msg["type"] == "error":
                    return
            pytest.fail("no error message for empty control")

    def test_size_control_changes_frame_sizes(self, running_server):
        _, port = running_server
        with connect(f"ws://127.0.0.1:{port}") as client:
            client.send(json.dumps({"type": "control", "function_size_pt": 9}))
            for _ in range(15):
                msg = recv_json(client)
                if msg["type"] != "frame":
                    continue
                sizes = {c["size_pt"] for c in msg["cues"] if not c["is_keyword"]}
                if sizes == {9}:
                    return
            pytest.fail("function size control never reflected in frames")


class TestSlowClient:
    def test_slow_client_dropped_when_queue_full(self):
        class StuckConnection:
            id = "stuck"

            def __init__(self):
                self.block = threading.Event()
                self.closed = False

            def send(self, message):
                self.block.wait(5)

            def close(self, code=None, reason=None):
                self.closed = True

        script = script_from_text("demo", "word", ms_per_word=10)
        server = CaptionServer(script, mode=Mode.NORMAL, scale=0)
        stuck = StuckConnection()
        client = _Client(stuck)
        server._clients.add(client)
        # one message occupies the sender thread, the rest fill the queue
        for _ in range(40):
            server._broadcast("x")
        assert client not in server._clients
        assert stuck.closed
        stuck.block.set()


class TestStartupErrors:
    def test_port_busy_raises(self):
        script = script_from_text("demo", "word")
        first = CaptionServer(script, scale=0)
        port = first.start()
        second = CaptionServer(script, scale=0, port=port)
        with pytest.raises(OSError):
            second.start()
        first.stop()
