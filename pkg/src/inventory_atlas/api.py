"""Read-only HTTP API over an immutable snapshot.

Endpoints return the exact bytes of the corresponding library export, so
transport adds nothing on top of the library's canonical JSON.
"""

from __future__ import annotations

from dataclasses import replace

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response

from . import analytics, exporters, layouts
from .analytics import UnknownItemError
from .layouts import KeywordExcludedError, RadialParams
from .simulation import SimulationParams, Viewport
from .snapshot import Snapshot

GROUP_BY = {"macro": "macro_theme", "sub": "sub_theme", "new": "new_theme"}

MAX_CACHED_LAYOUTS = 128


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=status,
                        content={"error": {"code": code, "message": message}})


def _json_bytes(data: bytes) -> Response:
    return Response(content=data, media_type="application/json; charset=utf-8")


def create_app(snapshot: Snapshot, ui_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="inventory-atlas", docs_url=None, redoc_url=None)
    app.add_middleware(CORSMiddleware, allow_origins=["*"], allow_methods=["GET"],
                       allow_headers=["*"])
    network_bytes = exporters.export_network_json(snapshot.network, snapshot.assignment)
    keywords_bytes = exporters.export_keywords_json(snapshot.dictionary)
    layout_cache: dict[tuple, bytes] = {}

    def sim_params(width: float, height: float, seed: int, ticks: int) -> SimulationParams:
        base = SimulationParams()
        return replace(base, seed=seed, ticks=ticks,
                       viewport=Viewport(width=width, height=height))

    @app.get("/api/summary")
    def get_summary(group_by: str = "macro", order: str = "natural"):
        grouping = GROUP_BY.get(group_by, group_by)
        if grouping not in analytics.GROUPINGS:
            return _error(400, "bad_grouping", f"unknown grouping: {group_by!r}")
        if order not in analytics.ORDER_MODES:
            return _error(400, "bad_order", f"unknown order mode: {order!r}")
        summary = analytics.summarize(snapshot.corpus, grouping, order,
                                      assignment=snapshot.assignment)
        return _json_bytes(exporters.export_summary_json(summary))

    @app.get("/api/network")
    def get_network():
        return _json_bytes(network_bytes)

    @app.get("/api/keywords")
    def get_keywords():
        return _json_bytes(keywords_bytes)

    @app.get("/api/layout/grouped")
    def get_layout_grouped(width: float = 960, height: float = 640,
                           seed: int = 42, ticks: int = 300):
        key = ("grouped", width, height, seed, ticks)
        if key not in layout_cache:
            layout = layouts.layout_grouped(snapshot.network, snapshot.assignment,
                                            sim_params(width, height, seed, ticks))
            if len(layout_cache) >= MAX_CACHED_LAYOUTS:
                layout_cache.clear()
            layout_cache[key] = exporters.export_layout_json(layout)
        return _json_bytes(layout_cache[key])

    @app.get("/api/layout/radial")
    def get_layout_radial(keyword: str, width: float = 960, height: float = 640,
                          seed: int = 42, ticks: int = 300):
        key = ("radial", keyword, width, height, seed, ticks)
        if key not in layout_cache:
            try:
                layout = layouts.layout_radial(
                    snapshot.corpus, snapshot.network, keyword, snapshot.config,
                    sim_params(width, height, seed, ticks), RadialParams())
            except KeywordExcludedError as exc:
                return _error(400, "keyword_excluded", str(exc))
            if len(layout_cache) >= MAX_CACHED_LAYOUTS:
                layout_cache.clear()
            layout_cache[key] = exporters.export_layout_json(layout)
        return _json_bytes(layout_cache[key])

    @app.get("/api/rank")
    def get_rank(keyword: str):
        try:
            matches = analytics.rank_by_keyword(snapshot.corpus, keyword,
                                                snapshot.config)
        except KeywordExcludedError as exc:
            return _error(400, "keyword_excluded", str(exc))
        return _json_bytes(exporters.export_rank_json(keyword, matches))

    @app.get("/api/items/{item_id}")
    def get_item(item_id: str):
        try:
            detail = analytics.item_detail(snapshot.corpus, snapshot.network,
                                           snapshot.assignment, item_id)
        except UnknownItemError:
            return _error(404, "unknown_item", f"no item with id {item_id!r}")
        return _json_bytes(exporters.export_item_detail_json(detail))

    if ui_dir:
        from fastapi.staticfiles import StaticFiles
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
