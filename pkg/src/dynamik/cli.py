"""Command-line entry point.

Subcommands:

    classify <file> [--lexicon PATH]        per-token class listing
    metrics  <file...> [--size-ratio R --exponent {1,2}]
                                            one JSON density report per file
    style    <file> --mode M --out OUT.{vtt,ass}
                                            batch export, one sentence per frame
    replay   <script> --mode M [--scale S]  frames as wire messages on stdout
    serve    <script> --port P --mode M [--scale S]
                                            run the broadcast server

The environment variable DYNAMIK_LEXICON supplies a default lexicon path when
--lexicon is not given.  Batch commands are deterministic byte-for-byte for
identical inputs and flags; errors go to stderr with a nonzero exit code.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .classify import classify_tokens
from .export import to_ass, to_webvtt
from .lexicon import Lexicon, LexiconError, load_lexicon
from .metrics import DensityUndefinedError, density_report
from .replay import ReplayScriptError, load_script, replay, split_sentences
from .scheduler import schedule_frames
from .server import CaptionServer
from .style import Mode, StyledFrame, apply_mode, default_style
from .tokenizer import tokenize
from .wire import encode_frame

_SENTENCE_FRAME_MS = 2000

# fmt: off
_EXPORTERS = {".vtt": to_webvtt, ".ass": to_ass}
# fmt: on


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dynamik", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser("classify", help="print per-token word classes")
    p_classify.add_argument("file", type=Path)
    p_classify.add_argument("--lexicon", type=Path, default=None)

    p_metrics = sub.add_parser("metrics", help="print density reports as JSON")
    p_metrics.add_argument("files", nargs="+", type=Path, metavar="file")
    p_metrics.add_argument("--size-ratio", type=float, default=None)
    p_metrics.add_argument(
        "--exponent",
        type=int,
        choices=(1, 2),
        default=None,
        help="report only the chosen area reading (1 linear, 2 quadratic)",
    )
    p_metrics.add_argument("--lexicon", type=Path, default=None)

    p_style = sub.add_parser("style", help="export a text as a subtitle file")
    p_style.add_argument("file", type=Path)
    p_style.add_argument("--mode", required=True, choices=[m.value for m in Mode])
    p_style.add_argument("--out", required=True, type=Path)
    p_style.add_argument("--lexicon", type=Path, default=None)

    p_replay = sub.add_parser("replay", help="print frames for a replay script")
    p_replay.add_argument("script", type=Path)
    p_replay.add_argument("--mode", required=True, choices=[m.value for m in Mode])
    p_replay.add_argument("--scale", type=float, default=1.0)
    p_replay.add_argument("--lexicon", type=Path, default=None)

    p_serve = sub.add_parser("serve", help="serve frames over WebSocket")
    p_serve.add_argument("script", type=Path)
    p_serve.add_argument("--port", required=True, type=int)
    p_serve.add_argument("--mode", required=True, choices=[m.value for m in Mode])
    p_serve.add_argument("--scale", type=float, default=1.0)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--lexicon", type=Path, default=None)

    return parser


def _resolve_lexicon(path: Path | None) -> Lexicon | None:
    if path is None:
        env = os.environ.get("DYNAMIK_LEXICON")
        path = Path(env) if env else None
    return load_lexicon(path) if path is not None else None


def _cmd_classify(args) -> int:
    lexicon = _resolve_lexicon(args.lexicon)
    text = args.file.read_text("utf-8")
    for item in classify_tokens(tokenize(text), lexicon):
        subkind = item.word_class.subkind.value if item.word_class.subkind else "-"
        flag = "keyword" if item.is_keyword else "-"
        print(f"{item.surface}\t{item.word_class.family.value}\t{subkind}\t{flag}")
    return 0


def _cmd_metrics(args) -> int:
    lexicon = _resolve_lexicon(args.lexicon)
    for path in args.files:
        text = path.read_text("utf-8")
        report = density_report(
            classify_tokens(tokenize(text), lexicon), size_ratio=args.size_ratio
        )
        payload = report.to_dict()
        if args.exponent == 1:
            payload.pop("area_ratio_quadratic")
        elif args.exponent == 2:
            payload.pop("area_ratio_linear")
        print(json.dumps(payload, ensure_ascii=False))
    return 0


def _cmd_style(args) -> int:
    lexicon = _resolve_lexicon(args.lexicon)
    exporter = _EXPORTERS.get(args.out.suffix.lower())
    if exporter is None:
        raise ValueError(f"unsupported output extension {args.out.suffix!r}; use .vtt or .ass")
    text = args.file.read_text("utf-8")
    cfg = default_style()
    mode = Mode.parse(args.mode)
    frames = []
    for i, sentence in enumerate(split_sentences(text)):
        cues = apply_mode(classify_tokens(tokenize(sentence), lexicon), mode, cfg)
        frames.append(
            StyledFrame(seq=i + 1, t_ms=i * _SENTENCE_FRAME_MS, mode=mode, cues=cues)
        )
    args.out.write_text(exporter(frames, cfg, linger_ms=_SENTENCE_FRAME_MS), encoding="utf-8")
    return 0


def _cmd_replay(args) -> int:
    lexicon = _resolve_lexicon(args.lexicon)
    script = load_script(args.script)
    frames = schedule_frames(
        replay(script, scale=args.scale),
        Mode.parse(args.mode),
        lexicon=lexicon,
        realtime=args.scale > 0,
    )
    for frame in frames:
        print(encode_frame(frame), flush=args.scale > 0)
    return 0


def _cmd_serve(args) -> int:
    lexicon = _resolve_lexicon(args.lexicon)
    script = load_script(args.script)
    server = CaptionServer(
        script,
        mode=Mode.parse(args.mode),
        scale=args.scale,
        lexicon=lexicon,
        host=args.host,
        port=args.port,
    )
    print(f"serving ws://{args.host}:{args.port} (Ctrl-C to stop)", file=sys.stderr)
    server.serve_until_interrupted()
    return 0


_COMMANDS = {
    "classify": _cmd_classify,
    "metrics": _cmd_metrics,
    "style": _cmd_style,
    "replay": _cmd_replay,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except BrokenPipeError:
        # downstream reader (e.g. head) closed the pipe; not our error
        sys.stderr.close()
        return 0
    except (OSError, ValueError, LexiconError, ReplayScriptError, DensityUndefinedError) as exc:
        print(f"dynamik: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
