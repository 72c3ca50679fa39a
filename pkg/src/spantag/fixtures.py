"""Embedded three-sentence fixture corpus used by tests and docs.

Restaurant-review sentences with seven gold triplets covering single-word
terms, a multi-word aspect, a multi-word opinion, and an opinion-before-
aspect pair; the gold set round-trips losslessly under every scheme's
encode/decode pair except where tests deliberately perturb it.
"""

from __future__ import annotations

from pathlib import Path

from .corpus import CorpusSplit, parse_corpus

FIXTURE_LINES = (
    "The menu is interesting and quite reasonably priced .####"
    "[([1], [3], 'POS'), ([1], [6, 7], 'POS'), ([7], [6], 'POS')]",
    "BEST spicy tuna roll , great asian salad .####"
    "[([1, 2, 3], [0], 'POS'), ([6, 7], [5], 'POS')]",
    "Service is excellent , no wait , and you get a lot for the price .####"
    "[([0], [2], 'POS'), ([5], [4], 'POS')]",
)


def fixture_text() -> str:
    return "".join(line + "\n" for line in FIXTURE_LINES)


def fixture_split(name: str = "fixture") -> CorpusSplit:
    return parse_corpus(fixture_text(), name)


def write_fixture(path: str | Path) -> Path:
    path = Path(path)
    path.write_text(fixture_text(), encoding="utf-8")
    return path
