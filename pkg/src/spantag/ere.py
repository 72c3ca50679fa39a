"""Schema-parameterized span tagging for entity-relation extraction.

Generalizes the two-role tagging idea: dimension one holds entity type
labels, dimension two holds relation labels made directional with an
``(H-T)``/``(T-H)`` suffix (head entity before or after the tail). The
decoder adaptation follows from the direction label: it selects which
snippet boundary hosts the head, then applies the same maximum-length
retrieval and removal guards as the sentiment decoder. The source scheme
only defines the tag set, so the decoding rule here is an interpretation.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .core import Sentence, Span

HEAD_FIRST = "H-T"
TAIL_FIRST = "T-H"


def _check_name(name: str, what: str) -> str:
    if not name or name == "N" or any(ch.isspace() for ch in name) or "," in name:
        raise ValueError(f"invalid {what} name {name!r}")
    return name


@dataclass(frozen=True)
class RoleSchema:
    """Entity type names and relation names; relations expand to 2 directions."""

    entities: tuple[str, ...]
    relations: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entities", tuple(self.entities))
        object.__setattr__(self, "relations", tuple(self.relations))
        for name in self.entities:
            _check_name(name, "entity")
        for name in self.relations:
            _check_name(name, "relation")
        if len(set(self.entities)) != len(self.entities):
            raise ValueError("duplicate entity labels")
        if len(set(self.relations)) != len(self.relations):
            raise ValueError("duplicate relation labels")

    def directional_labels(self) -> tuple[str, ...]:
        out = []
        for rel in self.relations:
            out.append(f"{rel}({HEAD_FIRST})")
            out.append(f"{rel}({TAIL_FIRST})")
        return tuple(out)

    def split_directional(self, label: str) -> tuple[str, str]:
        """Break ``rel(H-T)`` into (relation, direction)."""
        for rel in self.relations:
            for direction in (HEAD_FIRST, TAIL_FIRST):
                if label == f"{rel}({direction})":
                    return rel, direction
        raise ValueError(f"label {label!r} not in schema relation tag set")

    def header(self) -> str:
        return (
            f"#schema entities={','.join(self.entities)}"
            f" relations={','.join(self.relations)}"
        )

    @classmethod
    def from_header(cls, line: str) -> "RoleSchema":
        parts = line.strip().split(" ")
        if len(parts) != 3 or parts[0] != "#schema":
            raise ValueError(f"malformed schema header {line!r}")
        fields = {}
        for part in parts[1:]:
            key, _, value = part.partition("=")
            if key not in ("entities", "relations"):
                raise ValueError(f"unknown schema field {key!r}")
            fields[key] = tuple(v for v in value.split(",") if v)
        return cls(fields.get("entities", ()), fields.get("relations", ()))


@dataclass(frozen=True)
class Entity:
    span: Span
    label: str


@dataclass(frozen=True)
class RelationTriplet:
    head: Entity
    tail: Entity
    relation: str

    def __post_init__(self) -> None:
        if self.head.span == self.tail.span:
            raise ValueError(f"head and tail are the same span {self.head.span}")

    @property
    def direction(self) -> str:
        return HEAD_FIRST if self.head.span.start <= self.tail.span.start else TAIL_FIRST

    def snippet(self) -> Span:
        return Span(
            min(self.head.span.start, self.tail.span.start),
            max(self.head.span.end, self.tail.span.end),
        )

    def sort_key(self) -> tuple:
        return (self.head.span, self.tail.span, self.relation)


@dataclass(frozen=True)
class RelationCell:
    entity: str = "N"
    relation: str = "N"

    @property
    def is_default(self) -> bool:
        return self.entity == "N" and self.relation == "N"


@dataclass(frozen=True)
class RelationTable:
    sentence_id: str
    n: int
    cells: dict[Span, RelationCell]

    def __post_init__(self) -> None:
        kept = {}
        for span, cell in self.cells.items():
            if not span.in_range(self.n):
                raise ValueError(f"span {span} out of range (n={self.n})")
            if not cell.is_default:
                kept[span] = cell
        object.__setattr__(self, "cells", kept)

    def get(self, span: Span) -> RelationCell:
        return self.cells.get(span, RelationCell())

    def sorted_cells(self) -> list[tuple[Span, RelationCell]]:
        return sorted(self.cells.items(), key=lambda item: item[0])


@dataclass(frozen=True)
class EreIncident:
    sentence_id: str
    span: Span
    note: str


def encode_relations(
    sentence: Sentence,
    entities: Sequence[Entity],
    relations: Sequence[RelationTriplet],
    schema: RoleSchema,
) -> tuple[RelationTable, list[EreIncident]]:
    """Tag entity spans with their type and relation hulls with a directional label.

    First-writer wins on collisions; every overwrite attempt is recorded.
    """
    n = sentence.n
    cells: dict[Span, RelationCell] = {}
    incidents: list[EreIncident] = []

    def cell(span: Span) -> RelationCell:
        return cells.get(span, RelationCell())

    declared = {}
    for entity in entities:
        if entity.label not in schema.entities:
            raise ValueError(f"entity label {entity.label!r} not in schema")
        if not entity.span.in_range(n):
            raise ValueError(f"entity span {entity.span} out of range (n={n})")
        current = cell(entity.span)
        if current.entity != "N" and current.entity != entity.label:
            incidents.append(
                EreIncident(
                    sentence.id,
                    entity.span,
                    f"entity label {entity.label} dropped; span already {current.entity}",
                )
            )
        else:
            cells[entity.span] = RelationCell(entity.label, current.relation)
            declared[entity.span] = entity.label
    for rel in relations:
        if rel.relation not in schema.relations:
            raise ValueError(f"relation {rel.relation!r} not in schema")
        for endpoint in (rel.head, rel.tail):
            if declared.get(endpoint.span) != endpoint.label:
                raise ValueError(
                    f"relation endpoint {endpoint.span} ({endpoint.label}) is not a declared entity"
                )
        snippet = rel.snippet()
        label = f"{rel.relation}({rel.direction})"
        current = cell(snippet)
        if current.relation != "N" and current.relation != label:
            incidents.append(
                EreIncident(
                    sentence.id,
                    snippet,
                    f"relation label {label} dropped; span already {current.relation}",
                )
            )
        else:
            cells[snippet] = RelationCell(current.entity, label)
    return RelationTable(sentence.id, n, cells), incidents


def decode_relations(table: RelationTable, schema: RoleSchema) -> tuple[RelationTriplet, ...]:
    """Recover relation triplets; the direction label picks the head boundary."""
    entity_spans = {
        span for span, cell in table.cells.items() if cell.entity != "N"
    }
    label_of = {span: table.cells[span].entity for span in entity_spans}

    found = set()
    for snippet, cell in table.sorted_cells():
        if cell.relation == "N":
            continue
        relation, direction = schema.split_directional(cell.relation)
        i, j = snippet.start, snippet.end
        starters = [k for k in range(i, j + 1) if Span(i, k) in entity_spans]
        enders = [k for k in range(i, j + 1) if Span(k, j) in entity_spans]
        if not starters or not enders:
            continue
        if len(starters) > 1 and j in starters:
            starters.remove(j)
        if len(enders) > 1 and i in enders:
            enders.remove(i)
        start_term = Span(i, max(starters))
        end_term = Span(min(enders), j)
        if start_term == end_term:
            continue
        if direction == HEAD_FIRST:
            head, tail = start_term, end_term
        else:
            head, tail = end_term, start_term
        triplet = RelationTriplet(
            Entity(head, label_of[head]), Entity(tail, label_of[tail]), relation
        )
        if triplet.direction == direction:
            found.add(triplet)
    return tuple(sorted(found, key=RelationTriplet.sort_key))


def format_relation_tables(
    schema: RoleSchema, tables: Iterable[RelationTable]
) -> str:
    """Interchange text: one #schema header, then per-table blocks.

    Cell lines carry four fields: ``<start> <end> <entity|N> <relation|N>``.
    """
    blocks = [schema.header()]
    for table in tables:
        lines = [f"#table {table.sentence_id} {table.n} ere"]
        for span, cell in table.sorted_cells():
            lines.append(f"{span.start} {span.end} {cell.entity} {cell.relation}")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def parse_relation_tables(text: str) -> tuple[RoleSchema, list[RelationTable]]:
    schema: RoleSchema | None = None
    tables: list[RelationTable] = []
    header: tuple[str, int] | None = None
    cells: dict[Span, RelationCell] = {}

    def close() -> None:
        nonlocal header, cells
        if header is not None:
            tables.append(RelationTable(header[0], header[1], cells))
        header, cells = None, {}

    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            close()
            continue
        if stripped.startswith("#schema"):
            if schema is not None:
                raise ValueError(f"line {lineno}: duplicate schema header")
            schema = RoleSchema.from_header(stripped)
            continue
        if stripped.startswith("#table"):
            close()
            parts = stripped.split(" ")
            if len(parts) != 4 or parts[3] != "ere":
                raise ValueError(f"line {lineno}: malformed table header {stripped!r}")
            header = (parts[1], int(parts[2]))
            continue
        if schema is None or header is None:
            raise ValueError(f"line {lineno}: cell before schema/table header")
        parts = stripped.split(" ")
        if len(parts) != 4:
            raise ValueError(f"line {lineno}: malformed cell line {stripped!r}")
        span = Span(int(parts[0]), int(parts[1]))
        entity, relation = parts[2], parts[3]
        if entity != "N" and entity not in schema.entities:
            raise ValueError(f"line {lineno}: unknown entity label {entity!r}")
        if relation != "N":
            schema.split_directional(relation)
        if span in cells:
            raise ValueError(f"line {lineno}: duplicate cell for span {span}")
        cells[span] = RelationCell(entity, relation)
    close()
    if schema is None:
        raise ValueError("missing #schema header")
    return schema, tables


def read_relation_tables(path: str | Path) -> tuple[RoleSchema, list[RelationTable]]:
    return parse_relation_tables(Path(path).read_text(encoding="utf-8"))


def write_relation_tables(
    schema: RoleSchema, tables: Iterable[RelationTable], path: str | Path
) -> None:
    Path(path).write_text(format_relation_tables(schema, tables), encoding="utf-8")
