"""Core value types: sentences, spans, triplets, span tags, and tag tables.

All types here are immutable values; they can be shared freely between
concurrent workers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

ASPECT_SUBTAGS = ("N", "A")
OPINION_SUBTAGS = ("N", "O")
SENTIMENT_SUBTAGS = ("N", "NEG", "NEU", "POS")


class Sentiment(enum.Enum):
    """Polarity of an aspect-opinion pair."""

    POS = "POS"
    NEU = "NEU"
    NEG = "NEG"


class Scheme(enum.Enum):
    """Tag-table variant: independent role dimensions (3d) or merged (2d/1d)."""

    THREE_D = "3d"
    TWO_D = "2d"
    ONE_D = "1d"

    @classmethod
    def parse(cls, text: str) -> "Scheme":
        for member in cls:
            if member.value == text.lower():
                return member
        raise ValueError(f"unknown scheme {text!r} (expected 3d, 2d or 1d)")


@dataclass(frozen=True, order=True)
class Span:
    """Inclusive word-index interval [start, end], 0-based."""

    start: int
    end: int

    def __post_init__(self) -> None:
        if not 0 <= self.start <= self.end:
            raise ValueError(f"invalid span ({self.start}, {self.end})")

    @property
    def length(self) -> int:
        return self.end - self.start + 1

    def contains(self, other: "Span") -> bool:
        return self.start <= other.start and other.end <= self.end

    def in_range(self, n: int) -> bool:
        return self.end < n

    def __repr__(self) -> str:
        return f"({self.start}, {self.end})"


@dataclass(frozen=True)
class Sentence:
    """Pre-tokenized sentence; tokens are whitespace-free surface forms."""

    id: str
    tokens: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "tokens", tuple(self.tokens))
        if not self.tokens:
            raise ValueError(f"sentence {self.id!r} has no tokens")
        for tok in self.tokens:
            if not tok or any(ch.isspace() for ch in tok):
                raise ValueError(f"sentence {self.id!r} has a malformed token {tok!r}")

    @property
    def n(self) -> int:
        return len(self.tokens)

    def text(self, span: Span) -> str:
        """Surface form of a span within this sentence."""
        if not span.in_range(self.n):
            raise ValueError(f"span {span} out of range for sentence of length {self.n}")
        return " ".join(self.tokens[span.start : span.end + 1])


@dataclass(frozen=True)
class Triplet:
    """(aspect span, opinion span, sentiment). Aspect and opinion must differ."""

    aspect: Span
    opinion: Span
    sentiment: Sentiment

    def __post_init__(self) -> None:
        if self.aspect == self.opinion:
            raise ValueError(f"aspect and opinion are the same span {self.aspect}")

    def in_range(self, n: int) -> bool:
        return self.aspect.in_range(n) and self.opinion.in_range(n)

    def sort_key(self) -> tuple:
        return (self.aspect, self.opinion, self.sentiment.value)


def snippet_of(t: Triplet) -> Span:
    """Span from the earlier term's start to the later term's end."""
    return Span(
        min(t.aspect.start, t.opinion.start),
        max(t.aspect.end, t.opinion.end),
    )


class SpanRelation(enum.Enum):
    DISJOINT = "Disjoint"
    SHARED_START = "SharedStart"
    SHARED_END = "SharedEnd"
    NESTED_NO_SHARED_BOUNDARY = "NestedNoSharedBoundary"
    IDENTICAL = "Identical"
    PARTIAL_OVERLAP = "PartialOverlap"


def span_relation(p: Span, q: Span) -> SpanRelation:
    """Classify how two spans of the same sentence relate positionally."""
    if p == q:
        return SpanRelation.IDENTICAL
    if p.end < q.start or q.end < p.start:
        return SpanRelation.DISJOINT
    if p.start == q.start:
        return SpanRelation.SHARED_START
    if p.end == q.end:
        return SpanRelation.SHARED_END
    if p.contains(q) or q.contains(p):
        return SpanRelation.NESTED_NO_SHARED_BOUNDARY
    return SpanRelation.PARTIAL_OVERLAP


@dataclass(frozen=True)
class SpanTag:
    """Per-span role tag: aspect dim, opinion dim, sentiment dim.

    The all-N value means the span plays no role.
    """

    aspect: str = "N"
    opinion: str = "N"
    sentiment: str = "N"

    def __post_init__(self) -> None:
        if self.aspect not in ASPECT_SUBTAGS:
            raise ValueError(f"bad aspect sub-tag {self.aspect!r}")
        if self.opinion not in OPINION_SUBTAGS:
            raise ValueError(f"bad opinion sub-tag {self.opinion!r}")
        if self.sentiment not in SENTIMENT_SUBTAGS:
            raise ValueError(f"bad sentiment sub-tag {self.sentiment!r}")

    @property
    def is_default(self) -> bool:
        return self == NO_ROLE

    def active_roles(self) -> int:
        """Number of non-N dimensions."""
        return (self.aspect != "N") + (self.opinion != "N") + (self.sentiment != "N")

    def representable_in(self, scheme: Scheme) -> bool:
        """Whether this tag survives the scheme's dimension merging unchanged."""
        if scheme is Scheme.THREE_D:
            return True
        if scheme is Scheme.TWO_D:
            return not (self.aspect == "A" and self.opinion == "O")
        return self.active_roles() <= 1

    def label(self, scheme: Scheme) -> str:
        """Serialize to the scheme's label set; raises if not representable."""
        if not self.representable_in(scheme):
            raise ValueError(f"tag {self} not representable in scheme {scheme.value}")
        if scheme is Scheme.THREE_D:
            return f"{self.aspect}-{self.opinion}-{self.sentiment}"
        term = "A" if self.aspect == "A" else ("O" if self.opinion == "O" else "N")
        if scheme is Scheme.TWO_D:
            return f"{term}-{self.sentiment}"
        return self.sentiment if self.sentiment != "N" else term

    @classmethod
    def from_label(cls, label: str, scheme: Scheme) -> "SpanTag":
        """Parse a label from the scheme's label set back to sub-tags."""
        parts = label.split("-")
        # NEG/NEU/POS contain no dash, so the arity check is unambiguous.
        if scheme is Scheme.THREE_D:
            if len(parts) != 3:
                raise ValueError(f"label {label!r} is not a 3d tag")
            return cls(parts[0], parts[1], parts[2])
        if scheme is Scheme.TWO_D:
            if len(parts) != 2:
                raise ValueError(f"label {label!r} is not a 2d tag")
            term, sentiment = parts
            if term not in ("N", "O", "A"):
                raise ValueError(f"label {label!r} is not a 2d tag")
            return cls(
                "A" if term == "A" else "N",
                "O" if term == "O" else "N",
                sentiment,
            )
        if len(parts) != 1:
            raise ValueError(f"label {label!r} is not a 1d tag")
        if label == "A":
            return cls(aspect="A")
        if label == "O":
            return cls(opinion="O")
        if label in SENTIMENT_SUBTAGS:
            return cls(sentiment=label)
        raise ValueError(f"label {label!r} is not a 1d tag")


NO_ROLE = SpanTag()


@dataclass(frozen=True)
class TagTable:
    """Sparse upper-triangular span -> tag map for one sentence.

    Only non-default cells are stored; reading any other in-range span
    yields the all-N tag. Every stored cell must be representable in the
    table's scheme.
    """

    sentence_id: str
    n: int
    scheme: Scheme = Scheme.THREE_D
    cells: dict[Span, SpanTag] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"table {self.sentence_id!r} has n={self.n}")
        kept = {}
        for span, tag in self.cells.items():
            if not span.in_range(self.n):
                raise ValueError(
                    f"table {self.sentence_id!r}: span {span} out of range (n={self.n})"
                )
            if not tag.representable_in(self.scheme):
                raise ValueError(
                    f"table {self.sentence_id!r}: tag {tag} not valid under {self.scheme.value}"
                )
            if not tag.is_default:
                kept[span] = tag
        object.__setattr__(self, "cells", kept)

    def get(self, span: Span) -> SpanTag:
        """Total read: absent in-range cells are N-N-N."""
        if not span.in_range(self.n):
            raise ValueError(f"span {span} out of range (n={self.n})")
        return self.cells.get(span, NO_ROLE)

    def sorted_cells(self) -> list[tuple[Span, SpanTag]]:
        return sorted(self.cells.items(), key=lambda item: item[0])
