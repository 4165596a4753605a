"""Read-only queries over an immutable corpus + network snapshot:
distribution summaries, keyword rankings, per-item detail."""

from __future__ import annotations

from dataclasses import dataclass

from .ingest import Corpus, InventoryItem, ItemKind
from .keywords import DerivationConfig, count_matches, normalize_text
from .layouts import KeywordExcludedError
from .network import ClusterAssignment, ThematicNetwork

GROUPINGS = ("macro_theme", "sub_theme", "new_theme")
ORDER_MODES = ("natural", "desc_registers", "desc_operations", "independent")


class UnknownItemError(KeyError):
    pass


@dataclass(frozen=True)
class SummaryRow:
    label: str
    registers: int
    operations: int


@dataclass(frozen=True)
class ThemeSummary:
    grouping: str
    order_mode: str
    rows: tuple = ()
    # independent mode: each series sorted descending on its own
    rows_registers: tuple = ()  # (label, count)
    rows_operations: tuple = ()


@dataclass(frozen=True)
class RankedMatch:
    item_id: str
    name: str
    kind: ItemKind
    count: int


@dataclass(frozen=True)
class ItemDetail:
    item_id: str
    name: str
    kind: ItemKind
    macro_theme: str
    sub_theme: str
    new_theme: str
    objective: str
    metadata: dict
    keywords: tuple  # (term, weight), weight descending then term


def _bucket(item: InventoryItem, grouping: str, assignment: ClusterAssignment | None) -> str:
    if grouping == "macro_theme":
        return item.macro_theme
    if grouping == "sub_theme":
        return item.sub_theme
    if grouping == "new_theme":
        if assignment is None:
            raise ValueError("new_theme grouping requires a cluster assignment")
        return assignment.themes[item.id]
    raise ValueError(f"unknown grouping: {grouping!r}")


def summarize(corpus: Corpus, grouping: str, order_mode: str = "natural",
              assignment: ClusterAssignment | None = None) -> ThemeSummary:
    """Group-by counts per bucket, split by item kind.

    natural keeps first-appearance order; desc_* sorts by one series
    descending (ties lexicographic); independent returns the two series
    each sorted descending on its own ("separate order and align").
    """
    if order_mode not in ORDER_MODES:
        raise ValueError(f"unknown order mode: {order_mode!r}")
    buckets: dict[str, list[int]] = {}
    for item in corpus.items:
        label = _bucket(item, grouping, assignment)
        counts = buckets.setdefault(label, [0, 0])
        counts[0 if item.kind == ItemKind.REGISTER else 1] += 1
    rows = [SummaryRow(label, reg, op) for label, (reg, op) in buckets.items()]

    if order_mode == "independent":
        regs = sorted(((r.label, r.registers) for r in rows),
                      key=lambda e: (-e[1], e[0]))
        ops = sorted(((r.label, r.operations) for r in rows),
                     key=lambda e: (-e[1], e[0]))
        return ThemeSummary(grouping=grouping, order_mode=order_mode,
                            rows=tuple(rows),
                            rows_registers=tuple(regs), rows_operations=tuple(ops))
    if order_mode == "desc_registers":
        rows.sort(key=lambda r: (-r.registers, r.label))
    elif order_mode == "desc_operations":
        rows.sort(key=lambda r: (-r.operations, r.label))
    return ThemeSummary(grouping=grouping, order_mode=order_mode, rows=tuple(rows))


def rank_by_keyword(corpus: Corpus, keyword: str,
                    config: DerivationConfig) -> list[RankedMatch]:
    """Items with at least one occurrence of the keyword, count descending,
    ties by name then id."""
    tokens = normalize_text(keyword, config)
    if not tokens:
        raise KeywordExcludedError("keyword excluded by normalization")
    term = tokens[0]
    matches = []
    for item in corpus.items:
        c = count_matches(item, term, config)
        if c >= 1:
            matches.append(RankedMatch(item.id, item.name, item.kind, c))
    matches.sort(key=lambda m: (-m.count, m.name, m.item_id))
    return matches


def item_detail(corpus: Corpus, network: ThematicNetwork,
                assignment: ClusterAssignment, item_id: str,
                objective_column: str = "objetivo") -> ItemDetail:
    """Verbatim record plus derived theme and linked keywords."""
    item = corpus.get(item_id)
    if item is None:
        raise UnknownItemError(item_id)
    by_id = network.node_by_id()
    keywords = [(by_id[l.keyword_id].term, l.weight)
                for l in network.links if l.item_id == item_id]
    keywords.sort(key=lambda kw: (-kw[1], kw[0]))
    return ItemDetail(
        item_id=item.id, name=item.name, kind=item.kind,
        macro_theme=item.macro_theme, sub_theme=item.sub_theme,
        new_theme=assignment.themes.get(item.id, ""),
        objective=item.metadata.get(objective_column, ""),
        metadata=dict(item.metadata), keywords=tuple(keywords))
