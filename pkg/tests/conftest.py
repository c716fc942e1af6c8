import json
from pathlib import Path

import pytest

CORPUS_DIR = Path(__file__).parent / "data" / "corpus"
CLIP_NAMES = [f"news{i}" for i in range(1, 7)]


@pytest.fixture(scope="session")
def corpus() -> dict[str, str]:
    """The six bundled news transcripts, keyed by clip name."""
    return {name: (CORPUS_DIR / f"{name}.txt").read_text("utf-8") for name in CLIP_NAMES}


@pytest.fixture(scope="session")
def reference_counts() -> dict[str, dict]:
    """Reference word-class tallies recorded alongside the corpus."""
    return json.loads((CORPUS_DIR / "expected.json").read_text("utf-8"))
