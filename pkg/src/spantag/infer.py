"""Decode tag tables into triplets.

`greedy_decode` pairs each sentiment snippet with the maximum-length aspect
and opinion terms sharing its boundaries, trying both orderings (aspect
first, opinion first). `exhaustive_decode` is the quadratic-per-snippet
alternative that emits every boundary-covering pair; it serves as a
correctness oracle for the greedy strategy and is strictly slower.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codec import lift
from .core import Scheme, Sentiment, Span, TagTable, Triplet, snippet_of


@dataclass(frozen=True)
class DecoderOutput:
    """Deduplicated triplets plus work counters for complexity checks.

    ``suppressed`` records degenerate hits where a snippet would have been
    paired with itself (aspect == opinion == snippet); such pairs are
    dropped rather than emitted.
    """

    triplets: tuple[Triplet, ...]
    snippets_visited: int
    candidates_examined: int
    suppressed: tuple[tuple[Span, Sentiment], ...] = ()

    @property
    def triplet_set(self) -> frozenset[Triplet]:
        return frozenset(self.triplets)


def _ordering_key(t: Triplet) -> tuple:
    snippet = snippet_of(t)
    aspect_first = 0 if t.aspect.start == snippet.start else 1
    return (
        snippet.start,
        snippet.end,
        aspect_first,
        t.aspect,
        t.opinion,
        t.sentiment.value,
    )


def _role_sets(
    table: TagTable,
) -> tuple[set[Span], set[Span], list[tuple[Span, str]]]:
    lifted = lift(table)
    aspects = {span for span, tag in lifted.cells.items() if tag.aspect == "A"}
    opinions = {span for span, tag in lifted.cells.items() if tag.opinion == "O"}
    snippets = sorted(
        (span, tag.sentiment)
        for span, tag in lifted.cells.items()
        if tag.sentiment != "N"
    )
    return aspects, opinions, snippets


def greedy_decode(table: TagTable, scheme: Scheme | None = None) -> DecoderOutput:
    """Per snippet, retrieve the longest boundary-sharing aspect and opinion.

    For snippet (i, j) with sentiment s, two cases run in sequence:
    aspect-at-start/opinion-at-end and the mirror image. Within a case the
    snippet itself may serve as a term only when it is the sole candidate;
    otherwise it is removed before the maximum-length pick.
    """
    if scheme is not None and scheme is not table.scheme:
        raise ValueError(
            f"table {table.sentence_id!r} is {table.scheme.value}, not {scheme.value}"
        )
    aspects, opinions, snippets = _role_sets(table)

    found: set[Triplet] = set()
    suppressed: list[tuple[Span, Sentiment]] = []
    examined = 0
    for snippet, polarity in snippets:
        i, j = snippet.start, snippet.end
        s = Sentiment(polarity)
        # CASE-1: aspect shares the start, opinion shares the end.
        starters = [k for k in range(i, j + 1) if Span(i, k) in aspects]
        enders = [k for k in range(i, j + 1) if Span(k, j) in opinions]
        examined += 2 * (j - i + 1)
        if starters and enders:
            if len(starters) > 1 and j in starters:
                starters.remove(j)
            if len(enders) > 1 and i in enders:
                enders.remove(i)
            aspect = Span(i, max(starters))
            opinion = Span(min(enders), j)
            if aspect == opinion:
                suppressed.append((snippet, s))
            else:
                found.add(Triplet(aspect, opinion, s))
        # CASE-2: opinion shares the start, aspect shares the end.
        starters = [k for k in range(i, j + 1) if Span(i, k) in opinions]
        enders = [k for k in range(i, j + 1) if Span(k, j) in aspects]
        examined += 2 * (j - i + 1)
        if starters and enders:
            if len(starters) > 1 and j in starters:
                starters.remove(j)
            if len(enders) > 1 and i in enders:
                enders.remove(i)
            opinion = Span(i, max(starters))
            aspect = Span(min(enders), j)
            if aspect == opinion:
                suppressed.append((snippet, s))
            else:
                found.add(Triplet(aspect, opinion, s))

    return DecoderOutput(
        triplets=tuple(sorted(found, key=_ordering_key)),
        snippets_visited=len(snippets),
        candidates_examined=examined,
        suppressed=tuple(dict.fromkeys(suppressed)),
    )


def exhaustive_decode(table: TagTable, scheme: Scheme | None = None) -> DecoderOutput:
    """Emit every aspect-opinion pair that jointly covers a snippet's boundaries.

    Examines all candidate pairs inside each snippet (the common practice
    the greedy strategy avoids); used as the reference decoder in tests.
    """
    if scheme is not None and scheme is not table.scheme:
        raise ValueError(
            f"table {table.sentence_id!r} is {table.scheme.value}, not {scheme.value}"
        )
    aspects, opinions, snippets = _role_sets(table)
    aspect_list = sorted(aspects)
    opinion_list = sorted(opinions)

    found: set[Triplet] = set()
    suppressed: list[tuple[Span, Sentiment]] = []
    examined = 0
    for snippet, polarity in snippets:
        i, j = snippet.start, snippet.end
        s = Sentiment(polarity)
        inner_aspects = [a for a in aspect_list if i <= a.start and a.end <= j]
        inner_opinions = [o for o in opinion_list if i <= o.start and o.end <= j]
        for a in inner_aspects:
            for o in inner_opinions:
                examined += 1
                covers = (a.start == i and o.end == j) or (
                    o.start == i and a.end == j
                )
                if not covers:
                    continue
                if a == o:
                    suppressed.append((snippet, s))
                    continue
                found.add(Triplet(a, o, s))

    return DecoderOutput(
        triplets=tuple(sorted(found, key=_ordering_key)),
        snippets_visited=len(snippets),
        candidates_examined=examined,
        suppressed=tuple(dict.fromkeys(suppressed)),
    )
