"""Read and write the triplet corpus line format and the tag-table interchange.

Corpus lines follow the public release convention
``<tokens>####<triplet-list>`` with Python-literal triplet entries such as
``([1], [3], 'POS')``. Tag tables travel in a plain-text block format (see
`format_tagtables`) so that any external model's predictions can be decoded
and scored by this package.
"""

from __future__ import annotations

import ast
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .core import Scheme, Sentence, Span, SpanTag, TagTable, Triplet, Sentiment

SEPARATOR = "####"


class ParseError(ValueError):
    """A located parse failure; aggregates per-line errors for whole files."""

    def __init__(self, message: str, errors: list[str] | None = None):
        super().__init__(message)
        self.errors = errors if errors is not None else [message]


@dataclass(frozen=True)
class CorpusSplit:
    """An ordered corpus with deduplicated gold triplets per sentence."""

    name: str
    sentences: tuple[Sentence, ...]
    gold_by_sentence: dict[str, tuple[Triplet, ...]]
    removed_duplicates: int = 0

    def __post_init__(self) -> None:
        ids = [s.id for s in self.sentences]
        if len(set(ids)) != len(ids):
            raise ValueError(f"split {self.name!r} has duplicate sentence ids")

    @property
    def sentence_map(self) -> dict[str, Sentence]:
        return {s.id: s for s in self.sentences}

    def triplet_count(self) -> int:
        return sum(len(v) for v in self.gold_by_sentence.values())


def _parse_index_list(raw: object, which: str) -> Span:
    if not isinstance(raw, (list, tuple)) or not raw:
        raise ParseError(f"{which} index list must be a non-empty list, got {raw!r}")
    indices = []
    for v in raw:
        if isinstance(v, bool) or not isinstance(v, int):
            raise ParseError(f"non-integer index {v!r} in {which} index list")
        indices.append(v)
    lo, hi = min(indices), max(indices)
    if lo < 0:
        raise ParseError(f"negative index in {which} index list {indices}")
    if set(indices) != set(range(lo, hi + 1)):
        raise ParseError(f"non-contiguous {which} index list {indices}")
    return Span(lo, hi)


def parse_v2_line(line: str, sid: str = "s0") -> tuple[Sentence, tuple[Triplet, ...], int]:
    """Parse one ``tokens####[triplets]`` line.

    Returns the sentence, its gold triplets deduplicated in first-occurrence
    order, and the number of duplicates removed.
    """
    if SEPARATOR not in line:
        raise ParseError(f"missing {SEPARATOR!r} separator")
    text, _, raw_triplets = line.partition(SEPARATOR)
    text = text.strip()
    if not text:
        raise ParseError("empty sentence before separator")
    tokens = text.split(" ")
    if any(not tok or any(ch.isspace() for ch in tok) for tok in tokens):
        raise ParseError("malformed tokens (empty token or internal whitespace)")
    sentence = Sentence(sid, tuple(tokens))

    try:
        entries = ast.literal_eval(raw_triplets.strip())
    except (ValueError, SyntaxError) as exc:
        raise ParseError(f"malformed triplet list: {exc}") from exc
    if not isinstance(entries, (list, tuple)):
        raise ParseError(f"triplet list must be a list, got {type(entries).__name__}")

    triplets: list[Triplet] = []
    removed = 0
    for entry in entries:
        if not isinstance(entry, (list, tuple)) or len(entry) != 3:
            raise ParseError(f"triplet entry must have 3 elements, got {entry!r}")
        aspect = _parse_index_list(entry[0], "aspect")
        opinion = _parse_index_list(entry[1], "opinion")
        if not isinstance(entry[2], str):
            raise ParseError(f"sentiment must be a string, got {entry[2]!r}")
        try:
            sentiment = Sentiment(entry[2])
        except ValueError:
            raise ParseError(f"unknown sentiment literal {entry[2]!r}") from None
        if not aspect.in_range(sentence.n) or not opinion.in_range(sentence.n):
            raise ParseError(
                f"index out of range in entry {entry!r} (sentence length {sentence.n})"
            )
        if aspect == opinion:
            raise ParseError(f"aspect equals opinion in entry {entry!r}")
        t = Triplet(aspect, opinion, sentiment)
        if t in triplets:
            removed += 1
        else:
            triplets.append(t)
    return sentence, tuple(triplets), removed


def format_v2_line(sentence: Sentence, triplets: Sequence[Triplet]) -> str:
    """Canonical serialization of one sentence and its triplets."""
    parts = []
    for t in triplets:
        a = ", ".join(str(i) for i in range(t.aspect.start, t.aspect.end + 1))
        o = ", ".join(str(i) for i in range(t.opinion.start, t.opinion.end + 1))
        parts.append(f"([{a}], [{o}], '{t.sentiment.value}')")
    return f"{' '.join(sentence.tokens)}{SEPARATOR}[{', '.join(parts)}]"


def parse_corpus(text: str, name: str = "corpus") -> CorpusSplit:
    """Parse a whole corpus; every bad line is reported with its line number."""
    sentences: list[Sentence] = []
    gold: dict[str, tuple[Triplet, ...]] = {}
    removed = 0
    errors: list[str] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        sid = f"s{lineno - 1}"
        try:
            sentence, triplets, dropped = parse_v2_line(line, sid)
        except ParseError as exc:
            errors.append(f"line {lineno}: {exc}")
            continue
        sentences.append(sentence)
        gold[sid] = triplets
        removed += dropped
    if errors:
        raise ParseError(
            f"{len(errors)} bad line(s) in {name}:\n" + "\n".join(errors), errors
        )
    return CorpusSplit(name, tuple(sentences), gold, removed)


def read_corpus(path: str | Path, name: str | None = None) -> CorpusSplit:
    path = Path(path)
    return parse_corpus(path.read_text(encoding="utf-8"), name or path.stem)


def format_corpus(split: CorpusSplit) -> str:
    lines = [
        format_v2_line(sentence, split.gold_by_sentence.get(sentence.id, ()))
        for sentence in split.sentences
    ]
    return "".join(line + "\n" for line in lines)


def write_corpus(split: CorpusSplit, path: str | Path) -> None:
    Path(path).write_text(format_corpus(split), encoding="utf-8")


def format_tagtables(tables: Iterable[TagTable]) -> str:
    """Canonical interchange text: header, sorted cell lines, blank separators.

    Grammar per table: ``#table <sentence-id> <n> <scheme>`` followed by one
    ``<start> <end> <label>`` line per non-default cell.
    """
    blocks = []
    for table in tables:
        lines = [f"#table {table.sentence_id} {table.n} {table.scheme.value}"]
        for span, tag in table.sorted_cells():
            lines.append(f"{span.start} {span.end} {tag.label(table.scheme)}")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n" if blocks else ""


def write_tagtables(tables: Iterable[TagTable], path: str | Path) -> None:
    Path(path).write_text(format_tagtables(tables), encoding="utf-8")


def parse_tagtables(text: str, name: str = "tables") -> list[TagTable]:
    tables: list[TagTable] = []
    errors: list[str] = []

    header: tuple[str, int, Scheme] | None = None
    header_line = 0
    cells: dict[Span, SpanTag] = {}

    def close() -> None:
        nonlocal header, cells
        if header is None:
            return
        sid, n, scheme = header
        try:
            tables.append(TagTable(sid, n, scheme, cells))
        except ValueError as exc:
            errors.append(f"line {header_line}: {exc}")
        header, cells = None, {}

    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            close()
            continue
        if stripped.startswith("#table"):
            close()
            parts = stripped.split(" ")
            if len(parts) != 4:
                errors.append(f"line {lineno}: malformed table header {stripped!r}")
                continue
            try:
                n = int(parts[2])
                scheme = Scheme.parse(parts[3])
                if n < 1:
                    raise ValueError(f"table length must be >= 1, got {n}")
            except ValueError as exc:
                errors.append(f"line {lineno}: {exc}")
                continue
            header = (parts[1], n, scheme)
            header_line = lineno
            continue
        if header is None:
            errors.append(f"line {lineno}: cell before any #table header")
            continue
        parts = stripped.split(" ")
        if len(parts) != 3:
            errors.append(f"line {lineno}: malformed cell line {stripped!r}")
            continue
        sid, n, scheme = header
        try:
            span = Span(int(parts[0]), int(parts[1]))
            if not span.in_range(n):
                raise ValueError(f"span {span} out of range (n={n})")
            tag = SpanTag.from_label(parts[2], scheme)
        except ValueError as exc:
            errors.append(f"line {lineno}: {exc}")
            continue
        if span in cells:
            errors.append(f"line {lineno}: duplicate cell for span {span}")
            continue
        if not tag.is_default:
            cells[span] = tag
    close()

    if errors:
        raise ParseError(
            f"{len(errors)} bad line(s) in {name}:\n" + "\n".join(errors), errors
        )
    return tables


def read_tagtables(path: str | Path) -> list[TagTable]:
    path = Path(path)
    return parse_tagtables(path.read_text(encoding="utf-8"), path.name)
