"""CSV inventory ingestion: parse, merge and validate register/operation inventories."""

from __future__ import annotations

import csv
import io
import logging
from dataclasses import dataclass, field
from enum import Enum

logger = logging.getLogger(__name__)


class ItemKind(str, Enum):
    REGISTER = "administrative_register"
    OPERATION = "statistical_operation"


@dataclass(frozen=True)
class SchemaConfig:
    """Maps inventory column names onto the item fields we recognize.

    Defaults follow the Spanish column names common in these catalogs.
    Every unmapped column is kept verbatim in the item metadata.
    """

    name_column: str = "nombre"
    macro_column: str = "tema"
    sub_column: str = "subtema"

    @classmethod
    def from_mapping(cls, mapping: dict) -> "SchemaConfig":
        return cls(
            name_column=mapping.get("name_column", "nombre"),
            macro_column=mapping.get("macro_column", "tema"),
            sub_column=mapping.get("sub_column", "subtema"),
        )


@dataclass(frozen=True)
class InventoryItem:
    id: str
    name: str
    kind: ItemKind
    macro_theme: str
    sub_theme: str
    metadata: dict = field(default_factory=dict)  # column name -> raw cell text


@dataclass(frozen=True)
class SourceFile:
    path: str
    kind: ItemKind
    row_count: int


@dataclass(frozen=True)
class Corpus:
    items: tuple
    source_files: tuple
    schema: tuple  # recognized column names, first-seen order

    def get(self, item_id: str) -> InventoryItem | None:
        for item in self.items:
            if item.id == item_id:
                return item
        return None


@dataclass
class ValidationReport:
    errors: list = field(default_factory=list)  # (row locator, message)
    warnings: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors


class IngestError(ValueError):
    """Raised for unusable input: missing columns, malformed rows, id collisions."""


def parse_inventory(csv_text: str, kind: ItemKind,
                    schema_config: SchemaConfig | None = None) -> list[InventoryItem]:
    """Parse one inventory CSV into items.

    The first row is the header.  Rows whose cells are all empty are
    skipped (stray blank lines survive upstream cleansing).  Item ids are
    1-based data row numbers; merge_inventories prefixes them with the
    source tag to make them globally unique.
    """
    schema_config = schema_config or SchemaConfig()
    reader = csv.reader(io.StringIO(csv_text))
    try:
        header = next(reader)
    except StopIteration:
        raise IngestError("empty input: no header row")
    header = [h.strip() for h in header]
    if schema_config.name_column not in header:
        raise IngestError(f"missing mapped column: {schema_config.name_column!r}")

    items: list[InventoryItem] = []
    mapped = {schema_config.name_column, schema_config.macro_column, schema_config.sub_column}
    for row_no, row in enumerate(reader, start=1):
        if not row or all(not cell.strip() for cell in row):
            logger.warning("skipping blank row %d", row_no)
            continue
        if len(row) > len(header):
            raise IngestError(f"row {row_no}: {len(row)} cells but {len(header)} header columns")
        cells = dict(zip(header, row + [""] * (len(header) - len(row))))
        items.append(InventoryItem(
            id=str(row_no),
            name=cells.get(schema_config.name_column, ""),
            kind=kind,
            macro_theme=cells.get(schema_config.macro_column, ""),
            sub_theme=cells.get(schema_config.sub_column, ""),
            metadata={col: cells[col] for col in header if col not in mapped},
        ))
    return items


def merge_inventories(parts: list[tuple[str, ItemKind, list[InventoryItem]]],
                      schema: list[str] | None = None) -> Corpus:
    """Concatenate tagged item lists into one corpus.

    Ids become "<tag>:<row id>", so the same file ingested twice under
    distinct tags stays distinguishable.  Input order is preserved.
    """
    items: list[InventoryItem] = []
    sources: list[SourceFile] = []
    seen: set[str] = set()
    columns: list[str] = list(schema or [])
    for tag, kind, part in parts:
        for item in part:
            new_id = f"{tag}:{item.id}"
            if new_id in seen:
                raise IngestError(f"duplicate id after tagging: {new_id!r}")
            seen.add(new_id)
            items.append(InventoryItem(
                id=new_id, name=item.name, kind=item.kind,
                macro_theme=item.macro_theme, sub_theme=item.sub_theme,
                metadata=dict(item.metadata),
            ))
            for col in item.metadata:
                if col not in columns:
                    columns.append(col)
        sources.append(SourceFile(path=tag, kind=kind, row_count=len(part)))
    return Corpus(items=tuple(items), source_files=tuple(sources), schema=tuple(columns))


def validate_corpus(corpus: Corpus) -> ValidationReport:
    """Report structural problems.  The corpus is usable iff errors is empty."""
    report = ValidationReport()
    seen_ids: set[str] = set()
    seen_names: dict[str, str] = {}
    for item in corpus.items:
        if item.id in seen_ids:
            report.errors.append((item.id, "duplicate id"))
        seen_ids.add(item.id)
        name = item.name.strip()
        if not name:
            report.warnings.append((item.id, "empty name"))
        elif name in seen_names:
            report.warnings.append((item.id, f"duplicate name (also {seen_names[name]})"))
        else:
            seen_names[name] = item.id
        if not item.macro_theme.strip():
            report.warnings.append((item.id, "empty macro theme"))
        if not item.sub_theme.strip():
            report.warnings.append((item.id, "empty sub theme"))
    return report
