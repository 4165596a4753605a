import json
import xml.etree.ElementTree as ET

import pytest

from inventory_atlas import exporters
from inventory_atlas.analytics import item_detail, rank_by_keyword, summarize
from inventory_atlas.exporters import RenderStyle, SchemaError
from inventory_atlas.keywords import build_dictionary
from inventory_atlas.layouts import layout_grouped, layout_radial
from inventory_atlas.network import ThematicNetwork, assign_clusters, derive_network
from inventory_atlas.simulation import SimulationParams
from inventory_atlas.snapshot import (build_snapshot, export_snapshot_json,
                                      import_snapshot_json)

from conftest import make_f1_config, make_f1_corpus

SVG_NS = "{http://www.w3.org/2000/svg}"


@pytest.fixture(scope="module")
def f1():
    corpus = make_f1_corpus()
    config = make_f1_config()
    dictionary = build_dictionary(corpus, config)
    network = derive_network(corpus, dictionary, config)
    return corpus, config, network, assign_clusters(network)


def svg_elements(svg_bytes, tag, cls=None):
    root = ET.fromstring(svg_bytes)
    found = root.iter(SVG_NS + tag)
    if cls is None:
        return list(found)
    return [e for e in found if e.get("class") == cls]


class TestJsonRoundTrips:
    def test_corpus_round_trip(self, f1):
        corpus = f1[0]
        data = exporters.export_corpus_json(corpus)
        assert exporters.import_corpus_json(data) == corpus

    def test_network_round_trip(self, f1):
        _, _, network, assignment = f1
        data = exporters.export_network_json(network, assignment)
        back, back_assignment = exporters.import_network_json(data)
        assert back == network
        assert back_assignment == assignment

    def test_empty_network_valid(self):
        network = ThematicNetwork(nodes=(), links=())
        data = exporters.export_network_json(network)
        doc = json.loads(data)
        assert doc["nodes"] == [] and doc["links"] == []
        assert exporters.import_network_json(data)[0] == network

    def test_version_mismatch_rejected(self, f1):
        data = exporters.export_corpus_json(f1[0])
        doc = json.loads(data)
        doc["schema_version"] = 999
        with pytest.raises(SchemaError, match="version"):
            exporters.import_corpus_json(json.dumps(doc).encode())

    def test_wrong_kind_rejected(self, f1):
        data = exporters.export_corpus_json(f1[0])
        with pytest.raises(SchemaError):
            exporters.import_network_json(data)

    def test_exports_deterministic(self, f1):
        corpus, _, network, assignment = f1
        assert exporters.export_corpus_json(corpus) == exporters.export_corpus_json(corpus)
        assert exporters.export_network_json(network, assignment) \
            == exporters.export_network_json(network, assignment)

    def test_snapshot_round_trip(self, f1):
        corpus, config = f1[0], f1[1]
        snapshot = build_snapshot(corpus, config)
        back = import_snapshot_json(export_snapshot_json(snapshot))
        assert back.corpus == snapshot.corpus
        assert back.network == snapshot.network
        assert back.assignment == snapshot.assignment
        assert back.dictionary == snapshot.dictionary


class TestBarsSvg:
    def test_f1_macro_has_four_bars(self, f1):
        summary = summarize(f1[0], "macro_theme")
        svg = exporters.render_bars_svg(summary)
        assert len(svg_elements(svg, "rect", "bar")) == 4

    def test_empty_summary_axes_only(self):
        from inventory_atlas.analytics import ThemeSummary
        svg = exporters.render_bars_svg(ThemeSummary("macro_theme", "natural"))
        assert len(svg_elements(svg, "rect", "bar")) == 0
        assert len(svg_elements(svg, "line", "axis")) == 2
        ET.fromstring(svg)  # well-formed

    def test_bar_heights_proportional(self, f1):
        summary = summarize(f1[0], "macro_theme")
        svg = exporters.render_bars_svg(summary)
        bars = svg_elements(svg, "rect", "bar")
        heights = {float(b.get("data-value")): float(b.get("height")) for b in bars}
        max_h = max(heights.values())
        max_v = max(heights.keys())
        for value, h in heights.items():
            assert abs(h - max_h * value / max_v) <= 0.5

    def test_independent_mode_two_charts(self, f1):
        summary = summarize(f1[0], "sub_theme", "independent")
        svg = exporters.render_bars_svg(summary)
        assert len(svg_elements(svg, "line", "axis")) == 4
        assert len(svg_elements(svg, "rect", "bar")) == 4  # 2 buckets x 2 charts

    def test_deterministic(self, f1):
        summary = summarize(f1[0], "sub_theme")
        assert exporters.render_bars_svg(summary) == exporters.render_bars_svg(summary)


class TestLayoutSvg:
    def test_grouped_counts(self, f1):
        _, _, network, assignment = f1
        layout = layout_grouped(network, assignment, SimulationParams())
        svg = exporters.render_layout_svg(layout, network)
        assert len(svg_elements(svg, "rect", "cell")) == 3
        assert len(svg_elements(svg, "circle", "node")) == 6

    def test_radial_geometry(self, f1):
        corpus, config, network, _ = f1
        layout = layout_radial(corpus, network, "salud", config, SimulationParams())
        svg = exporters.render_layout_svg(layout, network)
        nodes = svg_elements(svg, "circle", "node")
        assert len(nodes) == 6
        assert len(svg_elements(svg, "circle", "ring")) == 1
        titles = {n.find(SVG_NS + "title").text for n in nodes}
        assert "Encuesta de salud (statistical_operation)" in titles
        # I1 (no match) farther from center than I3 (2 matches)
        cx, cy = layout.center
        dist = {p.id: ((p.x - cx) ** 2 + (p.y - cy) ** 2) ** 0.5
                for p in layout.placements}
        assert dist["I1"] >= dist["I3"]

    def test_empty_network_ring_only(self, f1):
        corpus, config = f1[0], f1[1]
        from inventory_atlas.ingest import Corpus
        empty = Corpus(items=(), source_files=(), schema=())
        network = ThematicNetwork(nodes=(), links=())
        layout = layout_radial(empty, network, "salud", config, SimulationParams())
        svg = exporters.render_layout_svg(layout, network)
        assert len(svg_elements(svg, "circle", "node")) == 0
        assert len(svg_elements(svg, "circle", "ring")) == 1

    def test_mismatch_rejected(self, f1):
        _, _, network, assignment = f1
        layout = layout_grouped(network, assignment, SimulationParams())
        smaller = ThematicNetwork(nodes=network.nodes[:-1], links=())
        bigger = ThematicNetwork(
            nodes=network.nodes + (network.keyword_nodes()[0],), links=())
        with pytest.raises(exporters.RenderError):
            exporters.render_layout_svg(layout, bigger)
        with pytest.raises(exporters.RenderError):
            exporters.render_layout_svg(layout, smaller)

    def test_deterministic(self, f1):
        _, _, network, assignment = f1
        layout = layout_grouped(network, assignment, SimulationParams())
        assert exporters.render_layout_svg(layout, network) \
            == exporters.render_layout_svg(layout, network)


def test_style_colors_must_differ():
    with pytest.raises(ValueError):
        RenderStyle(register_color="#111111", operation_color="#111111")


def test_detail_and_rank_exports(f1):
    corpus, config, network, assignment = f1
    detail = item_detail(corpus, network, assignment, "I3")
    doc = json.loads(exporters.export_item_detail_json(detail))
    assert doc["keywords"] == [{"term": "salud", "weight": 2},
                               {"term": "servicios", "weight": 2}]
    matches = rank_by_keyword(corpus, "salud", config)
    doc = json.loads(exporters.export_rank_json("salud", matches))
    assert [r["id"] for r in doc["rows"]] == ["I2", "I3"]
