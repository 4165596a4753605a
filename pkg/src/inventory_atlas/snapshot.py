"""Immutable snapshot: corpus + derivation config + dictionary + network +
cluster assignment, built once and shared read-only."""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import exporters
from .exporters import SCHEMA_VERSION, SchemaError, _dumps
from .ingest import Corpus
from .keywords import DerivationConfig, KeywordDictionary, build_dictionary
from .network import ClusterAssignment, ThematicNetwork, assign_clusters, derive_network


@dataclass(frozen=True)
class Snapshot:
    corpus: Corpus
    config: DerivationConfig
    dictionary: KeywordDictionary
    network: ThematicNetwork
    assignment: ClusterAssignment


def build_snapshot(corpus: Corpus, config: DerivationConfig) -> Snapshot:
    dictionary = build_dictionary(corpus, config)
    network = derive_network(corpus, dictionary, config)
    assignment = assign_clusters(network)
    return Snapshot(corpus=corpus, config=config, dictionary=dictionary,
                    network=network, assignment=assignment)


def export_snapshot_json(snapshot: Snapshot) -> bytes:
    return _dumps({
        "schema_version": SCHEMA_VERSION,
        "kind": "snapshot",
        "config": {
            "threshold_x": snapshot.config.threshold_x,
            "min_token_length": snapshot.config.min_token_length,
            "fields_included": list(snapshot.config.fields_included),
            "exclusion_list": sorted(snapshot.config.exclusion_list),
            "fingerprint": snapshot.config.fingerprint(),
        },
        "corpus": json.loads(exporters.export_corpus_json(snapshot.corpus)),
        "network": json.loads(exporters.export_network_json(
            snapshot.network, snapshot.assignment)),
    })


def import_snapshot_json(data: bytes) -> Snapshot:
    doc = exporters._load(data, "snapshot")
    cfg = doc["config"]
    config = DerivationConfig(
        threshold_x=cfg["threshold_x"],
        min_token_length=cfg["min_token_length"],
        fields_included=tuple(cfg["fields_included"]),
        exclusion_list=frozenset(cfg["exclusion_list"]),
    )
    if config.fingerprint() != cfg["fingerprint"]:
        raise SchemaError("config fingerprint mismatch in snapshot")
    corpus = exporters.import_corpus_json(_dumps(doc["corpus"]))
    network, assignment = exporters.import_network_json(_dumps(doc["network"]))
    if assignment is None:
        assignment = assign_clusters(network)
    # the dictionary is derivable; rebuild and cross-check the stored network
    dictionary = build_dictionary(corpus, config)
    rebuilt = derive_network(corpus, dictionary, config)
    if rebuilt != network:
        raise SchemaError("snapshot network disagrees with its corpus + config")
    return Snapshot(corpus=corpus, config=config, dictionary=dictionary,
                    network=network, assignment=assignment)
