"""Regenerate tests/fixtures/*.json from the backend library.

The fixtures are real API response bodies for the three-item demo corpus,
so the UI contract tests exercise exactly what the server would send.
Run from the frontend directory with the backend package installed:

    python3 scripts/generate_fixtures.py
"""

from pathlib import Path

from inventory_atlas import analytics, exporters
from inventory_atlas.ingest import Corpus, InventoryItem, ItemKind, SourceFile
from inventory_atlas.keywords import DerivationConfig, default_exclusions
from inventory_atlas.layouts import layout_grouped, layout_radial
from inventory_atlas.simulation import SimulationParams
from inventory_atlas.snapshot import build_snapshot

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def demo_corpus() -> Corpus:
    items = (
        InventoryItem(
            id="I1", name="Registro de créditos de vivienda",
            kind=ItemKind.REGISTER, macro_theme="Económica",
            sub_theme="Moneda banca y finanzas",
            metadata={"objetivo": "créditos para vivienda y financiación de vivienda"}),
        InventoryItem(
            id="I2", name="Encuesta de salud",
            kind=ItemKind.OPERATION, macro_theme="Social", sub_theme="Salud",
            metadata={"objetivo": "servicios de salud y cobertura de salud"}),
        InventoryItem(
            id="I3", name="Registro de servicios de salud",
            kind=ItemKind.REGISTER, macro_theme="Social", sub_theme="Salud",
            metadata={"objetivo": "prestación de servicios de salud"}),
    )
    return Corpus(items=items,
                  source_files=(SourceFile("demo-reg", ItemKind.REGISTER, 2),
                                SourceFile("demo-op", ItemKind.OPERATION, 1)),
                  schema=("objetivo",))


def main() -> None:
    config = DerivationConfig(threshold_x=2,
                              exclusion_list=default_exclusions() | {"encuesta"},
                              min_token_length=3)
    snapshot = build_snapshot(demo_corpus(), config)
    params = SimulationParams()
    OUT.mkdir(parents=True, exist_ok=True)

    def write(name: str, payload: bytes) -> None:
        (OUT / f"{name}.json").write_bytes(payload)
        print(f"wrote {name}.json")

    write("network", exporters.export_network_json(snapshot.network,
                                                   snapshot.assignment))
    write("summary_macro_natural", exporters.export_summary_json(
        analytics.summarize(snapshot.corpus, "macro_theme", "natural",
                            assignment=snapshot.assignment)))
    write("summary_sub_independent", exporters.export_summary_json(
        analytics.summarize(snapshot.corpus, "sub_theme", "independent",
                            assignment=snapshot.assignment)))
    write("layout_grouped", exporters.export_layout_json(
        layout_grouped(snapshot.network, snapshot.assignment, params)))
    write("layout_radial_salud", exporters.export_layout_json(
        layout_radial(snapshot.corpus, snapshot.network, "salud",
                      snapshot.config, params)))
    write("rank_salud", exporters.export_rank_json(
        "salud", analytics.rank_by_keyword(snapshot.corpus, "salud",
                                           snapshot.config)))
    for item_id in ("I1", "I2", "I3"):
        write(f"item_{item_id}", exporters.export_item_detail_json(
            analytics.item_detail(snapshot.corpus, snapshot.network,
                                  snapshot.assignment, item_id)))


if __name__ == "__main__":
    main()
