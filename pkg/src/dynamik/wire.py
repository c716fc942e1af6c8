"""Wire protocol: newline-delimited JSON messages.

Message shapes (field names are normative):

    {"type": "frame", "seq": 1, "t_ms": 500, "mode": "dynamik",
     "cues": [{"text": "the", "size_pt": 12, "visible": true,
               "is_keyword": false}], "overrun": false}
    {"type": "control", "mode": "keyword", "keyword_size_pt": 18,
     "function_size_pt": 12}          # every control field is optional
    {"type": "error", "reason": "..."}
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .style import Cue, Mode, StyledFrame


@dataclass(frozen=True)
class ControlMsg:
    mode: Mode | None = None
    keyword_size_pt: float | None = None
    function_size_pt: float | None = None

    def __post_init__(self) -> None:
        if self.mode is None and self.keyword_size_pt is None and self.function_size_pt is None:
            raise ValueError("control message must set at least one field")


def _num(value: float) -> float | int:
    return int(value) if float(value).is_integer() else float(value)


def encode_frame(frame: StyledFrame) -> str:
    return json.dumps(
        {
            "type": "frame",
            "seq": frame.seq,
            "t_ms": frame.t_ms,
            "mode": frame.mode.value,
            "cues": [
                {
                    "text": cue.text,
                    "size_pt": _num(cue.size_pt),
                    "visible": cue.visible,
                    "is_keyword": cue.is_keyword,
                }
                for cue in frame.cues
            ],
            "overrun": frame.overrun,
        },
        ensure_ascii=False,
    )


def encode_control(msg: ControlMsg) -> str:
    payload: dict = {"type": "control"}
    if msg.mode is not None:
        payload["mode"] = msg.mode.value
    if msg.keyword_size_pt is not None:
        payload["keyword_size_pt"] = _num(msg.keyword_size_pt)
    if msg.function_size_pt is not None:
        payload["function_size_pt"] = _num(msg.function_size_pt)
    return json.dumps(payload, ensure_ascii=False)


def encode_error(reason: str) -> str:
    return json.dumps({"type": "error", "reason": reason}, ensure_ascii=False)


def decode_message(line: str | bytes) -> dict:
    if isinstance(line, bytes):
        line = line.decode("utf-8")
    try:
        payload = json.loads(line)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not valid JSON: {exc}") from exc
    if not isinstance(payload, dict) or "type" not in payload:
        raise ValueError("message must be an object with a 'type' field")
    return payload


def parse_control(payload: dict) -> ControlMsg:
    """Validate a decoded control message; size constraints are checked later
    against the live config, not here."""
    if payload.get("type") != "control":
        raise ValueError("not a control message")
    mode = Mode.parse(payload["mode"]) if "mode" in payload else None

    def size(field: str) -> float | None:
        if field not in payload:
            return None
        value = payload[field]
        if not isinstance(value, (int, float)) or isinstance(value, bool) or value <= 0:
            raise ValueError(f"{field} must be a positive number")
        return float(value)

    return ControlMsg(
        mode=mode,
        keyword_size_pt=size("keyword_size_pt"),
        function_size_pt=size("function_size_pt"),
    )


def parse_frame(payload: dict) -> StyledFrame:
    """Rebuild a StyledFrame from a decoded frame message (client side)."""
    if payload.get("type") != "frame":
        raise ValueError("not a frame message")
    cues = tuple(
        Cue(
            text=c["text"],
            size_pt=float(c["size_pt"]),
            visible=bool(c["visible"]),
            is_keyword=bool(c["is_keyword"]),
        )
        for c in payload["cues"]
    )
    return StyledFrame(
        seq=int(payload["seq"]),
        t_ms=int(payload["t_ms"]),
        mode=Mode.parse(payload["mode"]),
        cues=cues,
        overrun=bool(payload.get("overrun", False)),
    )
