"""Shared fixtures and hypothesis strategies for the test suite."""

from hypothesis import assume
from hypothesis import strategies as st

from spantag.core import (
    Scheme,
    Sentence,
    Sentiment,
    Span,
    SpanRelation,
    SpanTag,
    TagTable,
    Triplet,
    snippet_of,
    span_relation,
)

MENU = Sentence(
    "s0",
    ("The", "menu", "is", "interesting", "and", "quite", "reasonably", "priced", "."),
)
MENU_GOLD = (
    Triplet(Span(1, 1), Span(3, 3), Sentiment.POS),
    Triplet(Span(1, 1), Span(6, 7), Sentiment.POS),
    Triplet(Span(7, 7), Span(6, 6), Sentiment.POS),
)

# Hand application of the tagging rules to MENU_GOLD; cross-checked by decode.
MENU_CELLS_3D = {
    Span(1, 1): "A-N-N",
    Span(3, 3): "N-O-N",
    Span(6, 6): "N-O-N",
    Span(7, 7): "A-N-N",
    Span(6, 7): "N-O-POS",
    Span(1, 3): "N-N-POS",
    Span(1, 7): "N-N-POS",
}

span_tags = st.builds(
    SpanTag,
    aspect=st.sampled_from(("N", "A")),
    opinion=st.sampled_from(("N", "O")),
    sentiment=st.sampled_from(("N", "NEG", "NEU", "POS")),
)


@st.composite
def tag_tables(draw, max_n=10):
    n = draw(st.integers(min_value=1, max_value=max_n))
    spans = [Span(i, j) for i in range(n) for j in range(i, n)]
    chosen = draw(st.lists(st.sampled_from(spans), unique=True, max_size=12))
    cells = {span: draw(span_tags) for span in chosen}
    return TagTable("s0", n, Scheme.THREE_D, cells)


@st.composite
def gold_sets(draw, max_n=10):
    n = draw(st.integers(min_value=2, max_value=max_n))
    spans = [Span(i, j) for i in range(n) for j in range(i, n)]
    k = draw(st.integers(min_value=0, max_value=4))
    triplets = []
    for _ in range(k):
        a = draw(st.sampled_from(spans))
        o = draw(st.sampled_from(spans))
        if a == o:
            continue
        s = draw(st.sampled_from(list(Sentiment)))
        t = Triplet(a, o, s)
        if t not in triplets:
            triplets.append(t)
    sentence = Sentence("s0", tuple(f"w{i}" for i in range(n)))
    return sentence, tuple(triplets)


def recoverable(gold):
    """Spec precondition for exact 3d round-trip, checked structurally.

    No nested pair inside a triplet, unique snippets, single-role terms,
    and no other gold term sharing a snippet's start or end inside it.
    """
    terms = []
    for t in gold:
        terms.append((t.aspect, "a"))
        terms.append((t.opinion, "o"))
    roles = {}
    for span, role in terms:
        roles.setdefault(span, set()).add(role)
    if any(len(r) > 1 for r in roles.values()):
        return False
    snippets = [snippet_of(t) for t in gold]
    if len(set(snippets)) != len(snippets):
        return False
    for t, snippet in zip(gold, snippets):
        if span_relation(t.aspect, t.opinion) is SpanRelation.NESTED_NO_SHARED_BOUNDARY:
            return False
        own = {t.aspect, t.opinion}
        for span, _ in terms:
            if span in own:
                continue
            inside = snippet.contains(span)
            if inside and (span.start == snippet.start or span.end == snippet.end):
                return False
    return True


@st.composite
def recoverable_gold(draw, max_n=10):
    """Random gold sets satisfying `recoverable` (rejection sampling)."""
    sentence, gold = draw(gold_sets(max_n=max_n))
    assume(len(gold) > 0)
    assume(recoverable(gold))
    return sentence, gold


@st.composite
def disjoint_gold(draw):
    """Gold sets whose term spans are pairwise disjoint.

    Such sets have no nesting, no shared snippets and no boundary-sharing
    competitors, so the 3d round-trip must be exact.
    """
    n = draw(st.integers(min_value=4, max_value=14))
    cuts = draw(
        st.lists(st.integers(min_value=0, max_value=n - 1), unique=True, min_size=2)
    )
    positions = sorted(cuts)
    spans = []
    for left, right in zip(positions, positions[1:] + [n]):
        spans.append(Span(left, draw(st.integers(min_value=left, max_value=right - 1))))
    pair_count = len(spans) // 2
    triplets = []
    for idx in range(pair_count):
        a, o = spans[2 * idx], spans[2 * idx + 1]
        if draw(st.booleans()):
            a, o = o, a
        triplets.append(Triplet(a, o, draw(st.sampled_from(list(Sentiment)))))
    sentence = Sentence("s0", tuple(f"w{i}" for i in range(n)))
    return sentence, tuple(triplets)
