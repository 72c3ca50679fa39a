"""Encode gold triplets into tag tables and project between scheme variants.

Projection to the merged 2d/1d tag sets can destroy role information; every
such loss is reported as an :class:`EncodingIncident`. Collisions are
resolved with the fixed priority sentiment > A > O (a snippet tag is needed
to pair terms during decoding, so losing it destroys strictly more
triplets). Sentiment conflicts keep the first-written value in input order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Iterable

from .core import (
    NO_ROLE,
    Scheme,
    Sentence,
    Span,
    SpanTag,
    TagTable,
    Triplet,
    snippet_of,
)


class IncidentKind(enum.Enum):
    SENTIMENT_CONFLICT = "SentimentConflict"
    ROLE_COLLISION_2D = "RoleCollision2D"
    ROLE_COLLISION_1D = "RoleCollision1D"


@dataclass(frozen=True)
class EncodingIncident:
    """One fact a scheme could not express.

    ``triplet`` is filled when the loss is attributable to a specific gold
    triplet (sentiment conflicts); role collisions are per-cell facts and
    carry no triplet.
    """

    sentence_id: str
    kind: IncidentKind
    losing_span: Span
    note: str
    triplet: Triplet | None = None


def encode(
    sentence: Sentence, gold: Iterable[Triplet], scheme: Scheme
) -> tuple[TagTable, list[EncodingIncident]]:
    """Tag every role a gold triplet assigns to a span.

    Under the full 3d tag set each triplet marks its aspect span A, its
    opinion span O, and its snippet span with the triplet's sentiment; a
    span may accumulate several roles. The 2d/1d variants are produced by
    projecting the 3d table. Triplets are processed in input order, which
    fixes the winner of sentiment conflicts.
    """
    n = sentence.n
    cells: dict[Span, SpanTag] = {}
    incidents: list[EncodingIncident] = []

    def cell(span: Span) -> SpanTag:
        return cells.get(span, NO_ROLE)

    for t in gold:
        if not t.in_range(n):
            raise ValueError(
                f"sentence {sentence.id!r}: triplet {t} out of range (n={n})"
            )
        cells[t.aspect] = replace(cell(t.aspect), aspect="A")
        cells[t.opinion] = replace(cell(t.opinion), opinion="O")
        snippet = snippet_of(t)
        current = cell(snippet).sentiment
        if current == "N":
            cells[snippet] = replace(cell(snippet), sentiment=t.sentiment.value)
        elif current != t.sentiment.value:
            incidents.append(
                EncodingIncident(
                    sentence_id=sentence.id,
                    kind=IncidentKind.SENTIMENT_CONFLICT,
                    losing_span=snippet,
                    note=f"snippet already carries {current}; {t.sentiment.value} dropped",
                    triplet=t,
                )
            )

    table = TagTable(sentence.id, n, Scheme.THREE_D, cells)
    if scheme is Scheme.THREE_D:
        return table, incidents
    projected, losses = project(table, scheme)
    return projected, incidents + losses


def project(
    table: TagTable, scheme: Scheme
) -> tuple[TagTable, list[EncodingIncident]]:
    """Collapse a 3d table onto a reduced tag set, recording each lossy cell."""
    if table.scheme is not Scheme.THREE_D:
        raise ValueError("project expects a table with 3d semantics")
    if scheme is Scheme.THREE_D:
        return table, []

    cells: dict[Span, SpanTag] = {}
    incidents: list[EncodingIncident] = []
    for span, tag in table.sorted_cells():
        if tag.representable_in(scheme):
            cells[span] = tag
            continue
        if scheme is Scheme.TWO_D:
            # Only an A+O collision is inexpressible; A outranks O.
            cells[span] = SpanTag("A", "N", tag.sentiment)
            kind, kept = IncidentKind.ROLE_COLLISION_2D, "A"
        else:
            if tag.sentiment != "N":
                cells[span] = SpanTag(sentiment=tag.sentiment)
                kept = tag.sentiment
            elif tag.aspect == "A":
                cells[span] = SpanTag(aspect="A")
                kept = "A"
            else:
                cells[span] = SpanTag(opinion="O")
                kept = "O"
            kind = IncidentKind.ROLE_COLLISION_1D
        incidents.append(
            EncodingIncident(
                sentence_id=table.sentence_id,
                kind=kind,
                losing_span=span,
                note=f"cell {tag.label(Scheme.THREE_D)} reduced to {kept}",
            )
        )
    return TagTable(table.sentence_id, table.n, scheme, cells), incidents


def lift(table: TagTable, scheme: Scheme | None = None) -> TagTable:
    """View a table of any scheme under the full 3d sub-tag semantics.

    Inverse of :func:`project` on tables that projected without incidents.
    """
    if scheme is not None and scheme is not table.scheme:
        raise ValueError(
            f"table {table.sentence_id!r} is {table.scheme.value}, not {scheme.value}"
        )
    if table.scheme is Scheme.THREE_D:
        return table
    return TagTable(table.sentence_id, table.n, Scheme.THREE_D, dict(table.cells))
