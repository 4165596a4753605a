import json

import pytest
from fastapi.testclient import TestClient

from inventory_atlas import analytics, exporters, layouts
from inventory_atlas.api import create_app
from inventory_atlas.layouts import RadialParams
from inventory_atlas.simulation import SimulationParams, Viewport
from inventory_atlas.snapshot import build_snapshot

from conftest import make_f1_config, make_f1_corpus


@pytest.fixture(scope="module")
def snapshot():
    return build_snapshot(make_f1_corpus(), make_f1_config())


@pytest.fixture(scope="module")
def client(snapshot):
    return TestClient(create_app(snapshot))


class TestEndpoints:
    def test_rank_salud(self, client):
        r = client.get("/api/rank", params={"keyword": "salud"})
        assert r.status_code == 200
        rows = r.json()["rows"]
        assert [(row["id"], row["count"]) for row in rows] == [("I2", 3), ("I3", 2)]

    def test_unknown_item_404(self, client):
        r = client.get("/api/items/zzz")
        assert r.status_code == 404
        assert r.json()["error"]["code"] == "unknown_item"

    def test_stopword_keyword_400(self, client):
        r = client.get("/api/layout/radial", params={"keyword": "de"})
        assert r.status_code == 400
        assert "excluded by normalization" in r.json()["error"]["message"]

    def test_summary_groupings(self, client):
        r = client.get("/api/summary", params={"group_by": "macro"})
        assert r.status_code == 200
        assert [row["label"] for row in r.json()["rows"]] == ["Económica", "Social"]
        assert client.get("/api/summary", params={"group_by": "colour"}).status_code == 400
        assert client.get("/api/summary", params={"order": "sideways"}).status_code == 400

    def test_network_and_keywords(self, client):
        net = client.get("/api/network").json()
        assert len(net["nodes"]) == 6
        kw = client.get("/api/keywords").json()
        assert kw["entries"] == {"salud": 5, "vivienda": 3, "servicios": 3}

    def test_item_detail(self, client):
        doc = client.get("/api/items/I1").json()
        assert doc["name"] == "Registro de créditos de vivienda"
        assert doc["new_theme"] == "vivienda"

    def test_layout_grouped_has_cells(self, client):
        doc = client.get("/api/layout/grouped", params={"seed": 7}).json()
        assert {c["label"] for c in doc["cells"]} == {"salud", "vivienda", "servicios"}
        assert len(doc["positions"]) == 6


class TestTransportAddsNothing:
    def test_rank_bytes_equal_library(self, client, snapshot):
        expected = exporters.export_rank_json(
            "salud", analytics.rank_by_keyword(snapshot.corpus, "salud",
                                               snapshot.config))
        assert client.get("/api/rank", params={"keyword": "salud"}).content == expected

    def test_summary_bytes_equal_library(self, client, snapshot):
        expected = exporters.export_summary_json(
            analytics.summarize(snapshot.corpus, "sub_theme", "independent",
                                assignment=snapshot.assignment))
        r = client.get("/api/summary", params={"group_by": "sub",
                                               "order": "independent"})
        assert r.content == expected

    def test_network_bytes_equal_library(self, client, snapshot):
        expected = exporters.export_network_json(snapshot.network,
                                                 snapshot.assignment)
        assert client.get("/api/network").content == expected

    def test_layouts_bytes_equal_library(self, client, snapshot):
        params = SimulationParams(seed=11, ticks=120,
                                  viewport=Viewport(800.0, 600.0))
        expected = exporters.export_layout_json(
            layouts.layout_grouped(snapshot.network, snapshot.assignment, params))
        r = client.get("/api/layout/grouped",
                       params={"seed": 11, "ticks": 120, "width": 800, "height": 600})
        assert r.content == expected

        expected = exporters.export_layout_json(
            layouts.layout_radial(snapshot.corpus, snapshot.network, "salud",
                                  snapshot.config, params, RadialParams()))
        r = client.get("/api/layout/radial",
                       params={"keyword": "salud", "seed": 11, "ticks": 120,
                               "width": 800, "height": 600})
        assert r.content == expected

    def test_item_bytes_equal_library(self, client, snapshot):
        expected = exporters.export_item_detail_json(
            analytics.item_detail(snapshot.corpus, snapshot.network,
                                  snapshot.assignment, "I3"))
        assert client.get("/api/items/I3").content == expected


class TestStatelessness:
    def test_repeated_gets_identical(self, client):
        a = client.get("/api/layout/radial", params={"keyword": "salud", "seed": 3})
        b = client.get("/api/layout/radial", params={"keyword": "salud", "seed": 3})
        assert a.content == b.content

    def test_seed_in_query_changes_layout(self, client):
        a = client.get("/api/layout/grouped", params={"seed": 1})
        b = client.get("/api/layout/grouped", params={"seed": 2})
        assert a.content != b.content
        assert json.loads(a.content)["cells"] == json.loads(b.content)["cells"]
