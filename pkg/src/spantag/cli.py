"""Command-line surface: encode, decode, score, stats, limits, roundtrip.

Exit codes: 0 success, 1 usage error, 2 parse/data error, 3 roundtrip
mismatch. Identical invocations produce byte-identical outputs; the
optional ``--jobs N`` flag (default from SPANTAG_JOBS) parallelizes
per-sentence work without affecting output order.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Callable, Iterable, Sequence, TypeVar

from . import codec, corpus, infer, metrics
from .analysis import format_limits_report, format_stats_report, limitation_report
from .core import Scheme, Sentence, TagTable, Triplet

T = TypeVar("T")
U = TypeVar("U")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_MISMATCH = 3

JOBS_ENV_VAR = "SPANTAG_JOBS"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV_VAR, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _map_ordered(fn: Callable[[T], U], items: Sequence[T], jobs: int) -> list[U]:
    """Apply fn to each item, optionally in worker processes, preserving order."""
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    chunk = max(1, len(items) // (jobs * 4))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=chunk))


def _encode_one(
    item: tuple[Sentence, tuple[Triplet, ...], Scheme]
) -> tuple[TagTable, list[codec.EncodingIncident]]:
    sentence, gold, scheme = item
    return codec.encode(sentence, gold, scheme)


def _decode_one(table: TagTable) -> tuple[Triplet, ...]:
    return infer.greedy_decode(table).triplets


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _incident_lines(incidents: Iterable[codec.EncodingIncident]) -> list[str]:
    lines = []
    for inc in incidents:
        lines.append(
            f"{inc.sentence_id} {inc.kind.value}"
            f" span={inc.losing_span.start}:{inc.losing_span.end} {inc.note}"
        )
    return lines


def cmd_encode(args: argparse.Namespace) -> int:
    split = corpus.read_corpus(args.corpus)
    scheme = Scheme.parse(args.scheme)
    work = [
        (sentence, split.gold_by_sentence[sentence.id], scheme)
        for sentence in split.sentences
    ]
    results = _map_ordered(_encode_one, work, args.jobs)
    tables = [table for table, _ in results]
    incidents = [inc for _, incs in results for inc in incs]
    _emit(corpus.format_tagtables(tables), args.out)
    lines = _incident_lines(incidents)
    if args.incidents is not None:
        Path(args.incidents).write_text(
            "".join(line + "\n" for line in lines), encoding="utf-8"
        )
    elif lines:
        for line in lines:
            print(f"incident: {line}", file=sys.stderr)
    return EXIT_OK


def cmd_decode(args: argparse.Namespace) -> int:
    tables = corpus.read_tagtables(args.tables)
    scheme = Scheme.parse(args.scheme)
    for table in tables:
        if table.scheme is not scheme:
            raise corpus.ParseError(
                f"table {table.sentence_id!r} uses scheme {table.scheme.value},"
                f" expected {scheme.value}"
            )
    sentences: dict[str, Sentence] = {}
    if args.corpus is not None:
        sentences = corpus.read_corpus(args.corpus).sentence_map
    decoded = _map_ordered(_decode_one, tables, args.jobs)
    lines = []
    for table, triplets in zip(tables, decoded):
        sentence = sentences.get(table.sentence_id)
        if sentence is None:
            if args.corpus is not None:
                raise corpus.ParseError(
                    f"sentence {table.sentence_id!r} not found in {args.corpus}"
                )
            # Tag tables carry no tokens; emit placeholders of the right length.
            sentence = Sentence(
                table.sentence_id, tuple(f"w{i}" for i in range(table.n))
            )
        elif sentence.n != table.n:
            raise corpus.ParseError(
                f"sentence {table.sentence_id!r} has {sentence.n} tokens,"
                f" table says {table.n}"
            )
        lines.append(corpus.format_v2_line(sentence, triplets))
    _emit("".join(line + "\n" for line in lines), args.out)
    return EXIT_OK


def cmd_score(args: argparse.Namespace) -> int:
    pred = corpus.read_corpus(args.pred).gold_by_sentence
    gold = corpus.read_corpus(args.gold).gold_by_sentence
    scores: dict[str, metrics.Score] = {}
    for task in metrics.Task:
        scores[task.value] = metrics.score_subtask(pred, gold, task)
    if args.breakdown:
        for setting in (
            metrics.Setting.SINGLE,
            metrics.Setting.MULTI,
            metrics.Setting.MULTI_ASPECT,
            metrics.Setting.MULTI_OPINION,
        ):
            scores[f"aste.{setting.value}"] = metrics.score_by_setting(
                pred, gold, setting
            )
    _emit(metrics.format_score_report(scores, args.format), args.out)
    return EXIT_OK


def cmd_stats(args: argparse.Namespace) -> int:
    split = corpus.read_corpus(args.corpus)
    _emit(format_stats_report(split, args.format), args.out)
    return EXIT_OK


def cmd_limits(args: argparse.Namespace) -> int:
    split = corpus.read_corpus(args.corpus)
    scheme = Scheme.parse(args.scheme)
    records, totals = limitation_report(split, scheme)
    _emit(format_limits_report(split, scheme, records, totals, args.format), args.out)
    return EXIT_OK


def cmd_roundtrip(args: argparse.Namespace) -> int:
    split = corpus.read_corpus(args.corpus)
    scheme = Scheme.parse(args.scheme)
    work = [
        (sentence, split.gold_by_sentence[sentence.id], scheme)
        for sentence in split.sentences
    ]
    encoded = _map_ordered(_encode_one, work, args.jobs)
    missing_total = 0
    extra_total = 0
    lines = []
    for sentence, (table, _) in zip(split.sentences, encoded):
        gold = set(split.gold_by_sentence[sentence.id])
        decoded = infer.greedy_decode(table).triplet_set
        missing = sorted(gold - decoded, key=Triplet.sort_key)
        extra = sorted(decoded - gold, key=Triplet.sort_key)
        missing_total += len(missing)
        extra_total += len(extra)
        for t in missing:
            lines.append(
                f"{sentence.id}: unrecovered aspect {t.aspect} opinion {t.opinion}"
                f" {t.sentiment.value}"
            )
        for t in extra:
            lines.append(
                f"{sentence.id}: spurious aspect {t.aspect} opinion {t.opinion}"
                f" {t.sentiment.value}"
            )
    lines.append(
        f"roundtrip scheme={scheme.value} sentences={len(split.sentences)}"
        f" triplets={split.triplet_count()}"
        f" unrecovered={missing_total} spurious={extra_total}"
    )
    _emit("".join(line + "\n" for line in lines), args.out)
    return EXIT_MISMATCH if missing_total else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spantag", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, scheme: bool = True, jobs: bool = False) -> None:
        if scheme:
            p.add_argument("--scheme", choices=["3d", "2d", "1d"], default="3d")
        p.add_argument("-o", "--out", default=None, help="output path (default stdout)")
        if jobs:
            p.add_argument("--jobs", type=int, default=_default_jobs())

    p = sub.add_parser("encode", help="corpus -> tag tables")
    p.add_argument("corpus")
    p.add_argument("--incidents", default=None, help="write incident log to a file")
    common(p, jobs=True)
    p.set_defaults(fn=cmd_encode)

    p = sub.add_parser("decode", help="tag tables -> triplet corpus")
    p.add_argument("tables")
    p.add_argument("--corpus", default=None, help="corpus supplying sentence tokens")
    common(p, jobs=True)
    p.set_defaults(fn=cmd_decode)

    p = sub.add_parser("score", help="pred vs gold triplet files -> metric report")
    p.add_argument("pred")
    p.add_argument("gold")
    p.add_argument("--breakdown", action="store_true", help="add setting breakdown")
    p.add_argument("--format", choices=["text", "kv"], default="text")
    common(p, scheme=False)
    p.set_defaults(fn=cmd_score)

    p = sub.add_parser("stats", help="corpus statistics report")
    p.add_argument("corpus")
    p.add_argument("--format", choices=["text", "kv"], default="text")
    common(p, scheme=False)
    p.set_defaults(fn=cmd_stats)

    p = sub.add_parser("limits", help="scheme failure analysis report")
    p.add_argument("corpus")
    p.add_argument("--format", choices=["text", "kv"], default="text")
    common(p)
    p.set_defaults(fn=cmd_limits)

    p = sub.add_parser("roundtrip", help="encode, decode and diff against gold")
    p.add_argument("corpus")
    common(p, jobs=True)
    p.set_defaults(fn=cmd_roundtrip)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help exits through argparse
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except corpus.ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except FileNotFoundError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
