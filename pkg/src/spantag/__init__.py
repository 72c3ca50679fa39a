"""Span tag-table codec, greedy triplet inference, and exact-match evaluation."""

from .codec import EncodingIncident, IncidentKind, encode, lift, project
from .core import (
    NO_ROLE,
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
from .corpus import (
    CorpusSplit,
    ParseError,
    parse_v2_line,
    read_corpus,
    read_tagtables,
    write_corpus,
    write_tagtables,
)
from .infer import DecoderOutput, exhaustive_decode, greedy_decode
from .metrics import (
    Score,
    Setting,
    Task,
    score_by_setting,
    score_subtask,
    score_triplets,
)

__version__ = "0.1.0"

__all__ = [
    "CorpusSplit",
    "DecoderOutput",
    "EncodingIncident",
    "IncidentKind",
    "NO_ROLE",
    "ParseError",
    "Scheme",
    "Score",
    "Sentence",
    "Sentiment",
    "Setting",
    "Span",
    "SpanRelation",
    "SpanTag",
    "TagTable",
    "Task",
    "Triplet",
    "encode",
    "exhaustive_decode",
    "greedy_decode",
    "lift",
    "parse_v2_line",
    "project",
    "read_corpus",
    "read_tagtables",
    "score_by_setting",
    "score_subtask",
    "score_triplets",
    "snippet_of",
    "span_relation",
    "write_corpus",
    "write_tagtables",
]
