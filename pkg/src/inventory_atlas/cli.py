"""Command line interface: ingest -> derive -> layout/summary/rank/serve.

Every flag can also come from the environment with an ATLAS_ prefix
(e.g. ATLAS_SERVE_PORT=8080 atlas serve ...).
"""

from __future__ import annotations

import json
import sys
from dataclasses import replace
from pathlib import Path

import click

from . import analytics, exporters, layouts
from .exporters import RenderStyle
from .ingest import (IngestError, ItemKind, SchemaConfig, merge_inventories,
                     parse_inventory, validate_corpus)
from .keywords import DerivationConfig, parse_exclusion_file
from .layouts import KeywordExcludedError, RadialParams
from .simulation import SimulationParams, Viewport
from .snapshot import (Snapshot, build_snapshot, export_snapshot_json,
                       import_snapshot_json)


@click.group(context_settings={"auto_envvar_prefix": "ATLAS"})
def main():
    """Thematic classification and coordinated layouts for inventories of
    administrative registers and statistical operations."""


def _load_schema(path: str | None) -> SchemaConfig:
    if not path:
        return SchemaConfig()
    return SchemaConfig.from_mapping(json.loads(Path(path).read_text("utf-8")))


@main.command()
@click.option("--registers", "-r", multiple=True, type=click.Path(exists=True),
              help="Register inventory CSV (repeatable).")
@click.option("--operations", "-o", multiple=True, type=click.Path(exists=True),
              help="Statistical operation inventory CSV (repeatable).")
@click.option("--schema", type=click.Path(exists=True),
              help="JSON column-mapping config.")
@click.option("--out", required=True, type=click.Path(), help="Corpus JSON output.")
def ingest(registers, operations, schema, out):
    """Parse inventory CSVs into a validated corpus file."""
    if not registers and not operations:
        raise click.UsageError("at least one --registers or --operations file required")
    schema_config = _load_schema(schema)
    parts = []
    try:
        for path in registers:
            items = parse_inventory(Path(path).read_text("utf-8"),
                                    ItemKind.REGISTER, schema_config)
            parts.append((Path(path).stem, ItemKind.REGISTER, items))
        for path in operations:
            items = parse_inventory(Path(path).read_text("utf-8"),
                                    ItemKind.OPERATION, schema_config)
            parts.append((Path(path).stem, ItemKind.OPERATION, items))
        corpus = merge_inventories(parts)
    except IngestError as exc:
        raise click.ClickException(str(exc))
    report = validate_corpus(corpus)
    for locator, message in report.warnings:
        click.echo(f"warning: {locator}: {message}", err=True)
    if not report.ok:
        for locator, message in report.errors:
            click.echo(f"error: {locator}: {message}", err=True)
        raise click.ClickException("corpus validation failed")
    Path(out).write_bytes(exporters.export_corpus_json(corpus))
    click.echo(f"wrote {len(corpus.items)} items to {out}")


@main.command()
@click.option("--corpus", "corpus_path", required=True, type=click.Path(exists=True))
@click.option("--exclusions", type=click.Path(exists=True),
              help="Exclusion list file (one token per line, # comments); "
                   "defaults to the bundled Spanish list.")
@click.option("--threshold", "-x", type=int, default=10, show_default=True,
              help="Keep keywords occurring strictly more than this count.")
@click.option("--min-token-length", type=int, default=3, show_default=True)
@click.option("--out", required=True, type=click.Path(), help="Snapshot JSON output.")
def derive(corpus_path, exclusions, threshold, min_token_length, out):
    """Derive the keyword dictionary, bipartite network and theme clusters."""
    corpus = exporters.import_corpus_json(Path(corpus_path).read_bytes())
    kwargs = {"threshold_x": threshold, "min_token_length": min_token_length}
    if exclusions:
        kwargs["exclusion_list"] = parse_exclusion_file(
            Path(exclusions).read_text("utf-8"))
    config = DerivationConfig(**kwargs)
    snapshot = build_snapshot(corpus, config)
    if not snapshot.dictionary.entries:
        click.echo("warning: empty keyword dictionary; lower --threshold?", err=True)
    Path(out).write_bytes(export_snapshot_json(snapshot))
    click.echo(f"{len(snapshot.dictionary.entries)} keywords, "
               f"{len(snapshot.network.links)} links -> {out}")


def _sim_params(width, height, seed, ticks) -> SimulationParams:
    return replace(SimulationParams(), seed=seed, ticks=ticks,
                   viewport=Viewport(width=width, height=height))


def _load_snapshot(path: str) -> Snapshot:
    try:
        return import_snapshot_json(Path(path).read_bytes())
    except exporters.SchemaError as exc:
        raise click.ClickException(f"{path}: {exc}")


layout_kinds = click.Choice(["grouped", "radial"])


@main.command()
@click.argument("kind", type=layout_kinds)
@click.option("--network", "snapshot_path", required=True, type=click.Path(exists=True),
              help="Snapshot file from `atlas derive`.")
@click.option("--keyword", help="Query keyword (radial layouts).")
@click.option("--seed", type=int, default=42, show_default=True)
@click.option("--ticks", type=int, default=300, show_default=True)
@click.option("--width", type=float, default=960.0, show_default=True)
@click.option("--height", type=float, default=640.0, show_default=True)
@click.option("--svg", "svg_path", type=click.Path(), help="Write rendered SVG here.")
@click.option("--json", "json_path", type=click.Path(), help="Write layout JSON here.")
def layout(kind, snapshot_path, keyword, seed, ticks, width, height,
           svg_path, json_path):
    """Compute a grouped-treemap or radial layout."""
    snapshot = _load_snapshot(snapshot_path)
    params = _sim_params(width, height, seed, ticks)
    if kind == "grouped":
        result = layouts.layout_grouped(snapshot.network, snapshot.assignment, params)
    else:
        if not keyword:
            raise click.UsageError("radial layouts need --keyword")
        try:
            result = layouts.layout_radial(snapshot.corpus, snapshot.network,
                                           keyword, snapshot.config, params,
                                           RadialParams())
        except KeywordExcludedError as exc:
            raise click.ClickException(str(exc))
    if not svg_path and not json_path:
        raise click.UsageError("nothing to do: pass --svg and/or --json")
    if json_path:
        Path(json_path).write_bytes(exporters.export_layout_json(result))
        click.echo(f"layout json -> {json_path}")
    if svg_path:
        style = replace(RenderStyle(), viewport=params.viewport)
        Path(svg_path).write_bytes(
            exporters.render_layout_svg(result, snapshot.network, style))
        click.echo(f"layout svg -> {svg_path}")


@main.command()
@click.option("--network", "snapshot_path", required=True, type=click.Path(exists=True))
@click.option("--group-by", type=click.Choice(["macro", "sub", "new"]),
              default="macro", show_default=True)
@click.option("--order", type=click.Choice(list(analytics.ORDER_MODES)),
              default="natural", show_default=True)
@click.option("--svg", "svg_path", type=click.Path())
@click.option("--json", "json_path", type=click.Path())
def summary(snapshot_path, group_by, order, svg_path, json_path):
    """Distribution of registers/operations per classification bucket."""
    snapshot = _load_snapshot(snapshot_path)
    grouping = {"macro": "macro_theme", "sub": "sub_theme", "new": "new_theme"}[group_by]
    result = analytics.summarize(snapshot.corpus, grouping, order,
                                 assignment=snapshot.assignment)
    if json_path:
        Path(json_path).write_bytes(exporters.export_summary_json(result))
        click.echo(f"summary json -> {json_path}")
    if svg_path:
        Path(svg_path).write_bytes(exporters.render_bars_svg(result))
        click.echo(f"summary svg -> {svg_path}")
    if not svg_path and not json_path:
        for row in result.rows:
            click.echo(f"{row.label}\t{row.registers}\t{row.operations}")


@main.command()
@click.option("--network", "snapshot_path", required=True, type=click.Path(exists=True))
@click.option("--keyword", required=True)
def rank(snapshot_path, keyword):
    """Items featuring the keyword, ordered by occurrence count."""
    snapshot = _load_snapshot(snapshot_path)
    try:
        matches = analytics.rank_by_keyword(snapshot.corpus, keyword, snapshot.config)
    except KeywordExcludedError as exc:
        raise click.ClickException(str(exc))
    for m in matches:
        click.echo(f"{m.count}\t{m.item_id}\t{m.kind.value}\t{m.name}")
    if not matches:
        click.echo("no matches", err=True)


@main.command()
@click.option("--snapshot", "snapshot_path", required=True, type=click.Path(exists=True))
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--ui-dir", type=click.Path(exists=True),
              help="Static frontend assets to serve at /.")
def serve(snapshot_path, port, host, ui_dir):
    """Serve the read-only analysis API (and optionally the UI)."""
    import uvicorn

    from .api import create_app
    snapshot = _load_snapshot(snapshot_path)
    app = create_app(snapshot, ui_dir=ui_dir)
    try:
        uvicorn.run(app, host=host, port=port, log_level="info")
    except OSError as exc:
        click.echo(f"cannot bind {host}:{port}: {exc}", err=True)
        sys.exit(1)


if __name__ == "__main__":
    main()
