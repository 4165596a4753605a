"""Canonical JSON serialization and static SVG rendering.

Every export is deterministic byte-for-byte for identical inputs: field
order is fixed, floats are emitted by repr (JSON) or at fixed precision
(SVG), and no timestamps or environment data leak in.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from xml.sax.saxutils import escape, quoteattr

from .analytics import ItemDetail, RankedMatch, ThemeSummary
from .ingest import Corpus, InventoryItem, ItemKind, SourceFile
from .keywords import KeywordDictionary
from .layouts import GROUPED_TREEMAP, RADIAL, LayoutResult
from .network import (ROLE_ITEM, ROLE_KEYWORD, ClusterAssignment, Link, Node,
                      ThematicNetwork)
from .simulation import Viewport

SCHEMA_VERSION = 1


class SchemaError(ValueError):
    """Unreadable or wrong-version document."""


def _dumps(obj: dict) -> bytes:
    return (json.dumps(obj, ensure_ascii=False, indent=2) + "\n").encode("utf-8")


def _load(data: bytes, expected_kind: str) -> dict:
    try:
        doc = json.loads(data.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise SchemaError(f"unreadable {expected_kind} document: {exc}") from exc
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise SchemaError(
            f"schema version mismatch: got {doc.get('schema_version')!r}, "
            f"expected {SCHEMA_VERSION}")
    if doc.get("kind") != expected_kind:
        raise SchemaError(f"expected a {expected_kind} document, got {doc.get('kind')!r}")
    return doc


# --- corpus ------------------------------------------------------------


def export_corpus_json(corpus: Corpus) -> bytes:
    return _dumps({
        "schema_version": SCHEMA_VERSION,
        "kind": "corpus",
        "schema": list(corpus.schema),
        "source_files": [
            {"path": s.path, "item_kind": s.kind.value, "row_count": s.row_count}
            for s in corpus.source_files],
        "items": [
            {"id": i.id, "name": i.name, "item_kind": i.kind.value,
             "macro_theme": i.macro_theme, "sub_theme": i.sub_theme,
             "metadata": i.metadata}
            for i in corpus.items],
    })


def import_corpus_json(data: bytes) -> Corpus:
    doc = _load(data, "corpus")
    items = tuple(InventoryItem(
        id=i["id"], name=i["name"], kind=ItemKind(i["item_kind"]),
        macro_theme=i["macro_theme"], sub_theme=i["sub_theme"],
        metadata=dict(i["metadata"])) for i in doc["items"])
    sources = tuple(SourceFile(path=s["path"], kind=ItemKind(s["item_kind"]),
                               row_count=s["row_count"])
                    for s in doc["source_files"])
    return Corpus(items=items, source_files=sources, schema=tuple(doc["schema"]))


# --- network -----------------------------------------------------------


def export_network_json(network: ThematicNetwork,
                        assignment: ClusterAssignment | None = None) -> bytes:
    nodes = []
    for n in network.nodes:
        if n.role == ROLE_ITEM:
            nodes.append({"id": n.id, "role": n.role, "name": n.name,
                          "item_kind": n.kind.value})
        else:
            nodes.append({"id": n.id, "role": n.role, "term": n.term,
                          "frequency": n.frequency})
    doc = {
        "schema_version": SCHEMA_VERSION,
        "kind": "network",
        "nodes": nodes,
        "links": [{"item": l.item_id, "keyword": l.keyword_id, "weight": l.weight}
                  for l in network.links],
    }
    if assignment is not None:
        doc["themes"] = dict(assignment.themes)
    return _dumps(doc)


def import_network_json(data: bytes) -> tuple[ThematicNetwork, ClusterAssignment | None]:
    doc = _load(data, "network")
    nodes = []
    for n in doc["nodes"]:
        if n["role"] == ROLE_ITEM:
            nodes.append(Node(id=n["id"], role=ROLE_ITEM, name=n["name"],
                              kind=ItemKind(n["item_kind"])))
        else:
            nodes.append(Node(id=n["id"], role=ROLE_KEYWORD, term=n["term"],
                              frequency=n["frequency"]))
    links = tuple(Link(item_id=l["item"], keyword_id=l["keyword"], weight=l["weight"])
                  for l in doc["links"])
    network = ThematicNetwork(nodes=tuple(nodes), links=links)
    assignment = None
    if "themes" in doc:
        from .network import assign_clusters
        assignment = assign_clusters(network)
        if assignment.themes != doc["themes"]:
            raise SchemaError("stored themes disagree with recomputed assignment")
    return network, assignment


# --- layouts, summaries, rankings, details ------------------------------


def export_layout_json(layout: LayoutResult) -> bytes:
    doc: dict = {
        "schema_version": SCHEMA_VERSION,
        "kind": "layout",
        "layout": layout.kind,
        "params": layout.params or {},
        "positions": [],
        "final_mean_displacement": layout.final_mean_displacement,
    }
    for p in layout.placements:
        entry: dict = {"id": p.id, "x": p.x, "y": p.y}
        if p.cell is not None:
            entry["cell"] = p.cell
        if p.target_radius is not None:
            entry["target_radius"] = p.target_radius
        if p.match_count is not None:
            entry["match_count"] = p.match_count
        doc["positions"].append(entry)
    if layout.kind == GROUPED_TREEMAP:
        doc["cells"] = [{"label": c.label, "x": c.rect.x, "y": c.rect.y,
                         "w": c.rect.w, "h": c.rect.h, "weight": c.weight}
                        for c in layout.cells]
    if layout.kind == RADIAL:
        doc["center"] = list(layout.center)
        doc["ring_radii"] = list(layout.ring_radii)
    return _dumps(doc)


def export_summary_json(summary: ThemeSummary) -> bytes:
    doc: dict = {
        "schema_version": SCHEMA_VERSION,
        "kind": "summary",
        "grouping": summary.grouping,
        "order_mode": summary.order_mode,
        "rows": [{"label": r.label, "registers": r.registers,
                  "operations": r.operations} for r in summary.rows],
    }
    if summary.order_mode == "independent":
        doc["rows_registers"] = [{"label": l, "count": c}
                                 for l, c in summary.rows_registers]
        doc["rows_operations"] = [{"label": l, "count": c}
                                  for l, c in summary.rows_operations]
    return _dumps(doc)


def export_rank_json(keyword: str, matches: list[RankedMatch]) -> bytes:
    return _dumps({
        "schema_version": SCHEMA_VERSION,
        "kind": "rank",
        "keyword": keyword,
        "rows": [{"id": m.item_id, "name": m.name, "item_kind": m.kind.value,
                  "count": m.count} for m in matches],
    })


def export_item_detail_json(detail: ItemDetail) -> bytes:
    return _dumps({
        "schema_version": SCHEMA_VERSION,
        "kind": "item_detail",
        "id": detail.item_id,
        "name": detail.name,
        "item_kind": detail.kind.value,
        "macro_theme": detail.macro_theme,
        "sub_theme": detail.sub_theme,
        "new_theme": detail.new_theme,
        "objective": detail.objective,
        "metadata": detail.metadata,
        "keywords": [{"term": t, "weight": w} for t, w in detail.keywords],
    })


def export_keywords_json(dictionary: KeywordDictionary) -> bytes:
    return _dumps({
        "schema_version": SCHEMA_VERSION,
        "kind": "keywords",
        "config_fingerprint": dictionary.config_fingerprint,
        "entries": dict(dictionary.entries),
    })


# --- SVG ---------------------------------------------------------------


@dataclass(frozen=True)
class RenderStyle:
    register_color: str = "#1f77b4"
    operation_color: str = "#ff7f0e"
    keyword_color: str = "#7f7f7f"
    font_family: str = "sans-serif"
    font_size: float = 11.0
    node_radius: float = 5.0
    viewport: Viewport = Viewport()

    def __post_init__(self):
        if self.register_color == self.operation_color:
            raise ValueError("register and operation colors must differ")

    def kind_color(self, kind: ItemKind | None) -> str:
        if kind == ItemKind.REGISTER:
            return self.register_color
        if kind == ItemKind.OPERATION:
            return self.operation_color
        return self.keyword_color


class RenderError(ValueError):
    pass


def _f(v: float) -> str:
    return f"{v:.2f}"


def _svg_doc(width: float, height: float, body: list[str]) -> bytes:
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>\n',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_f(width)}" height="{_f(height)}" '
        f'viewBox="0 0 {_f(width)} {_f(height)}">\n',
    ]
    parts.extend(body)
    parts.append("</svg>\n")
    return "".join(parts).encode("utf-8")


def _bar_chart(rows: list[tuple[str, list[tuple[float, str]]]],
               origin_x: float, width: float, height: float,
               style: RenderStyle) -> list[str]:
    """One chart: rows = (label, [(value, color), ...]) groups of bars."""
    margin = 30.0
    plot_w = width - 2 * margin
    plot_h = height - 2 * margin
    base_y = height - margin
    body = [f'<line class="axis" x1="{_f(origin_x + margin)}" y1="{_f(base_y)}" '
            f'x2="{_f(origin_x + margin + plot_w)}" y2="{_f(base_y)}" stroke="#333"/>\n',
            f'<line class="axis" x1="{_f(origin_x + margin)}" y1="{_f(margin)}" '
            f'x2="{_f(origin_x + margin)}" y2="{_f(base_y)}" stroke="#333"/>\n']
    if not rows:
        return body
    max_value = max((v for _, series in rows for v, _ in series), default=0.0)
    if max_value <= 0:
        max_value = 1.0
    group_w = plot_w / len(rows)
    series_n = max(len(series) for _, series in rows)
    bar_w = group_w * 0.8 / series_n
    for gi, (label, series) in enumerate(rows):
        gx = origin_x + margin + gi * group_w + group_w * 0.1
        for si, (value, color) in enumerate(series):
            h = plot_h * value / max_value
            body.append(
                f'<rect class="bar" x="{_f(gx + si * bar_w)}" y="{_f(base_y - h)}" '
                f'width="{_f(bar_w)}" height="{_f(h)}" fill={quoteattr(color)} '
                f'data-value="{value:g}"/>\n')
        body.append(
            f'<text class="label" x="{_f(gx + group_w * 0.4)}" y="{_f(base_y + 14)}" '
            f'text-anchor="middle" font-family={quoteattr(style.font_family)} '
            f'font-size="{_f(style.font_size)}">{escape(label)}</text>\n')
    return body


def render_bars_svg(summary: ThemeSummary, style: RenderStyle | None = None) -> bytes:
    """Grouped bar chart of a ThemeSummary; independent mode renders the two
    separately-ordered series as side-by-side aligned charts."""
    style = style or RenderStyle()
    w, h = style.viewport.width, style.viewport.height
    if summary.order_mode == "independent":
        left = [(label, [(float(c), style.register_color)])
                for label, c in summary.rows_registers]
        right = [(label, [(float(c), style.operation_color)])
                 for label, c in summary.rows_operations]
        body = _bar_chart(left, 0.0, w / 2, h, style)
        body += _bar_chart(right, w / 2, w / 2, h, style)
        return _svg_doc(w, h, body)
    rows = [(r.label, [(float(r.registers), style.register_color),
                       (float(r.operations), style.operation_color)])
            for r in summary.rows]
    return _svg_doc(w, h, _bar_chart(rows, 0.0, w, h, style))


def render_layout_svg(layout: LayoutResult, network: ThematicNetwork,
                      style: RenderStyle | None = None) -> bytes:
    """Node circles at final positions; grouped layouts add cell rectangles
    and theme labels, radial layouts the border ring and center mark."""
    style = style or RenderStyle()
    placed = {p.id: p for p in layout.placements}
    missing = [n.id for n in network.nodes if n.id not in placed]
    if missing or len(placed) != len(network.nodes):
        raise RenderError(f"layout does not cover the network (missing: {missing[:3]})")
    w = layout.params.get("width", style.viewport.width) if layout.params else style.viewport.width
    h = layout.params.get("height", style.viewport.height) if layout.params else style.viewport.height

    body: list[str] = []
    if layout.kind == GROUPED_TREEMAP:
        for cell in layout.cells:
            r = cell.rect
            body.append(
                f'<rect class="cell" x="{_f(r.x)}" y="{_f(r.y)}" width="{_f(r.w)}" '
                f'height="{_f(r.h)}" fill="none" stroke="#999"/>\n')
            body.append(
                f'<text class="cell-label" x="{_f(r.x + 4)}" y="{_f(r.y + 14)}" '
                f'font-family={quoteattr(style.font_family)} '
                f'font-size="{_f(style.font_size)}">{escape(cell.label)}</text>\n')
    if layout.kind == RADIAL:
        cx, cy = layout.center
        body.append(
            f'<circle class="ring" cx="{_f(cx)}" cy="{_f(cy)}" '
            f'r="{_f(layout.ring_radii[2])}" fill="none" stroke="#ccc"/>\n')
        body.append(
            f'<path class="center-mark" d="M {_f(cx - 4)} {_f(cy)} H {_f(cx + 4)} '
            f'M {_f(cx)} {_f(cy - 4)} V {_f(cy + 4)}" stroke="#333" fill="none"/>\n')
    for node in network.nodes:
        p = placed[node.id]
        if node.role == ROLE_ITEM:
            color = style.kind_color(node.kind)
            tip = f"{node.name} ({node.kind.value})"
        else:
            color = style.keyword_color
            tip = f"{node.term} (keyword)"
        body.append(
            f'<circle class="node" cx="{_f(p.x)}" cy="{_f(p.y)}" '
            f'r="{_f(style.node_radius)}" fill={quoteattr(color)}>'
            f'<title>{escape(tip)}</title></circle>\n')
    return _svg_doc(w, h, body)
