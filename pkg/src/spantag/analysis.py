"""Corpus statistics and tagging-scheme failure analysis.

`limitation_report` round-trips every sentence through encode and greedy
decode under a chosen scheme and classifies each gold triplet the scheme
failed to recover. Classification is first-match in a fixed order so every
failed triplet gets exactly one cause:

  Nested    - aspect and opinion are fully nested with no shared boundary
  Conflict  - two or more gold triplets share one snippet span
  MultiRole - a projection to 2d/1d collapsed away a sub-tag the triplet
              needs (split by the collapsed cell's role combination)
  Greedy    - a longer boundary-sharing term shadowed the gold term
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass

from .codec import encode, project
from .core import (
    Scheme,
    SpanRelation,
    SpanTag,
    TagTable,
    Triplet,
    snippet_of,
    span_relation,
)
from .corpus import CorpusSplit
from .infer import greedy_decode
from .metrics import Setting, setting_matches

COLLISION_PRIORITY = "sentiment > A > O"

ROLE_COMBOS = ("A-N-N", "N-O-N", "N-N-S", "A-O-N", "A-N-S", "N-O-S", "A-O-S")


@dataclass(frozen=True)
class RoleDistribution:
    """Counts of non-default cells by active role combination (S = any polarity)."""

    a_n_n: int = 0
    n_o_n: int = 0
    n_n_s: int = 0
    a_o_n: int = 0
    a_n_s: int = 0
    n_o_s: int = 0
    a_o_s: int = 0

    def as_dict(self) -> dict[str, int]:
        return {
            "A-N-N": self.a_n_n,
            "N-O-N": self.n_o_n,
            "N-N-S": self.n_n_s,
            "A-O-N": self.a_o_n,
            "A-N-S": self.a_n_s,
            "N-O-S": self.n_o_s,
            "A-O-S": self.a_o_s,
        }

    def total(self) -> int:
        return sum(self.as_dict().values())


def role_combo(tag: SpanTag) -> str:
    a = "A" if tag.aspect == "A" else "N"
    o = "O" if tag.opinion == "O" else "N"
    s = "S" if tag.sentiment != "N" else "N"
    return f"{a}-{o}-{s}"


def role_distribution(split: CorpusSplit) -> RoleDistribution:
    """Encode every sentence in 3d and bucket each cell by active roles."""
    counts = Counter()
    for sentence in split.sentences:
        table, _ = encode(sentence, split.gold_by_sentence[sentence.id], Scheme.THREE_D)
        for tag in table.cells.values():
            counts[role_combo(tag)] += 1
    return RoleDistribution(*(counts.get(key, 0) for key in ROLE_COMBOS))


@dataclass(frozen=True)
class SplitStats:
    sentences: int
    triplets: int
    pos: int
    neu: int
    neg: int


def sentiment_and_count_stats(split: CorpusSplit) -> SplitStats:
    polarity = Counter(
        t.sentiment.value for gold in split.gold_by_sentence.values() for t in gold
    )
    return SplitStats(
        sentences=len(split.sentences),
        triplets=split.triplet_count(),
        pos=polarity.get("POS", 0),
        neu=polarity.get("NEU", 0),
        neg=polarity.get("NEG", 0),
    )


def setting_counts(split: CorpusSplit) -> dict[Setting, int]:
    counts = {setting: 0 for setting in Setting}
    for gold in split.gold_by_sentence.values():
        for t in gold:
            for setting in Setting:
                counts[setting] += setting_matches(t, setting)
    return counts


class Cause(enum.Enum):
    NESTED = "Nested"
    CONFLICT = "Conflict"
    GREEDY = "Greedy"
    MULTI_ROLE_AON = "MultiRoleAON"
    MULTI_ROLE_A_OR_O_P = "MultiRoleAorOP"
    MULTI_ROLE_AOP = "MultiRoleAOP"


_MULTI_ROLE_BY_COMBO = {
    "A-O-N": Cause.MULTI_ROLE_AON,
    "A-N-S": Cause.MULTI_ROLE_A_OR_O_P,
    "N-O-S": Cause.MULTI_ROLE_A_OR_O_P,
    "A-O-S": Cause.MULTI_ROLE_AOP,
}


@dataclass(frozen=True)
class LimitationRecord:
    sentence_id: str
    triplet: Triplet
    cause: Cause
    scheme: Scheme


def _collapsed_cause(
    t: Triplet, full: TagTable, projected: TagTable
) -> Cause | None:
    """Multi-role cause if the projection dropped a sub-tag this triplet needs."""
    snippet = snippet_of(t)
    needs = (
        (t.aspect, lambda tag: tag.aspect == "A"),
        (t.opinion, lambda tag: tag.opinion == "O"),
        (snippet, lambda tag: tag.sentiment == t.sentiment.value),
    )
    for span, has_tag in needs:
        before, after = full.get(span), projected.get(span)
        if has_tag(before) and not has_tag(after):
            return _MULTI_ROLE_BY_COMBO[role_combo(before)]
    return None


def limitation_report(
    split: CorpusSplit, scheme: Scheme
) -> tuple[list[LimitationRecord], dict[Cause, int]]:
    """Round-trip every sentence and classify each unrecovered gold triplet."""
    records: list[LimitationRecord] = []
    for sentence in split.sentences:
        gold = split.gold_by_sentence[sentence.id]
        if not gold:
            continue
        full, _ = encode(sentence, gold, Scheme.THREE_D)
        table = full if scheme is Scheme.THREE_D else project(full, scheme)[0]
        recovered = greedy_decode(table).triplet_set
        snippet_uses = Counter(snippet_of(t) for t in gold)
        for t in gold:
            if t in recovered:
                continue
            if span_relation(t.aspect, t.opinion) is SpanRelation.NESTED_NO_SHARED_BOUNDARY:
                cause = Cause.NESTED
            elif snippet_uses[snippet_of(t)] >= 2:
                cause = Cause.CONFLICT
            else:
                cause = _collapsed_cause(t, full, table) or Cause.GREEDY
            records.append(LimitationRecord(sentence.id, t, cause, scheme))
    totals = {cause: 0 for cause in Cause}
    for record in records:
        totals[record.cause] += 1
    return records, totals


def format_stats_report(split: CorpusSplit, fmt: str = "text") -> str:
    """Render split statistics: counts, polarity, role distribution, settings."""
    stats = sentiment_and_count_stats(split)
    roles = role_distribution(split)
    settings = setting_counts(split)
    if fmt == "kv":
        lines = [
            f"split={split.name}",
            f"sentences={stats.sentences}",
            f"triplets={stats.triplets}",
            f"removed_duplicates={split.removed_duplicates}",
            f"pos={stats.pos}",
            f"neu={stats.neu}",
            f"neg={stats.neg}",
        ]
        for key, value in roles.as_dict().items():
            lines.append(f"role.{key}={value}")
        for setting in (
            Setting.SINGLE,
            Setting.MULTI,
            Setting.MULTI_ASPECT,
            Setting.MULTI_OPINION,
        ):
            lines.append(f"setting.{setting.value}={settings[setting]}")
        return "\n".join(lines) + "\n"

    lines = [
        f"split {split.name}",
        f"  sentences           {stats.sentences:>6}",
        f"  triplets            {stats.triplets:>6}",
        f"  removed duplicates  {split.removed_duplicates:>6}",
        f"  sentiment           pos {stats.pos}  neu {stats.neu}  neg {stats.neg}",
        "  role distribution (aspect-opinion-snippet)",
    ]
    for key, value in roles.as_dict().items():
        lines.append(f"    {key:<6} {value:>6}")
    lines.append("  setting counts")
    for setting, label in (
        (Setting.SINGLE, "single"),
        (Setting.MULTI, "multi"),
        (Setting.MULTI_ASPECT, "multi-aspect"),
        (Setting.MULTI_OPINION, "multi-opinion"),
    ):
        lines.append(f"    {label:<14} {settings[setting]:>6}")
    return "\n".join(lines) + "\n"


def format_limits_report(
    split: CorpusSplit,
    scheme: Scheme,
    records: list[LimitationRecord],
    totals: dict[Cause, int],
    fmt: str = "text",
) -> str:
    """Render the failure analysis, itemizing every unrecovered triplet."""
    if fmt == "kv":
        lines = [
            f"split={split.name}",
            f"scheme={scheme.value}",
            f"priority={COLLISION_PRIORITY.replace(' ', '')}",
            f"fail.total={len(records)}",
        ]
        for cause in Cause:
            lines.append(f"fail.{cause.value}={totals[cause]}")
        for idx, record in enumerate(records):
            t = record.triplet
            lines.append(
                f"fail.item.{idx}={record.sentence_id}"
                f" a={t.aspect.start}:{t.aspect.end}"
                f" o={t.opinion.start}:{t.opinion.end}"
                f" s={t.sentiment.value} cause={record.cause.value}"
            )
        return "\n".join(lines) + "\n"

    lines = [
        f"limitation report for split {split.name}, scheme {scheme.value}",
        f"  role-collision priority: {COLLISION_PRIORITY}",
        f"  unrecovered triplets: {len(records)}",
    ]
    for cause in Cause:
        lines.append(f"    {cause.value:<16} {totals[cause]:>4}")
    if records:
        lines.append("  itemized failures")
        for record in records:
            t = record.triplet
            lines.append(
                f"    {record.sentence_id}: aspect {t.aspect} opinion {t.opinion}"
                f" {t.sentiment.value} -> {record.cause.value}"
            )
    return "\n".join(lines) + "\n"
