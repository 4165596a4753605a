import random

import pytest

from inventory_atlas.ingest import Corpus, InventoryItem, ItemKind, SourceFile
from inventory_atlas.keywords import (DerivationConfig, KeywordDictionary,
                                      build_dictionary, default_exclusions)
from inventory_atlas.network import (UNCLASSIFIED, assign_clusters,
                                     derive_network, keyword_node_id,
                                     theme_distribution)

from conftest import oracle_count, random_corpus


@pytest.fixture
def f1_network(f1_corpus, f1_config):
    dictionary = build_dictionary(f1_corpus, f1_config)
    return derive_network(f1_corpus, dictionary, f1_config)


def link_map(network):
    return {(l.item_id, l.keyword_id): l.weight for l in network.links}


class TestDeriveNetwork:
    def test_f1_nodes_and_links(self, f1_network):
        assert len(f1_network.nodes) == 6
        assert {n.id for n in f1_network.item_nodes()} == {"I1", "I2", "I3"}
        assert {n.term for n in f1_network.keyword_nodes()} == {
            "salud", "vivienda", "servicios"}
        assert link_map(f1_network) == {
            ("I1", keyword_node_id("vivienda")): 3,
            ("I2", keyword_node_id("salud")): 3,
            ("I2", keyword_node_id("servicios")): 1,
            ("I3", keyword_node_id("salud")): 2,
            ("I3", keyword_node_id("servicios")): 2,
        }

    def test_empty_dictionary(self, f1_corpus, f1_config):
        empty = KeywordDictionary(entries={}, config_fingerprint="x")
        network = derive_network(f1_corpus, empty, f1_config)
        assert len(network.item_nodes()) == 3
        assert network.keyword_nodes() == []
        assert network.links == ()

    def test_repeated_term_single_link(self):
        item = InventoryItem(id="A", name="agua y más agua",
                             kind=ItemKind.REGISTER, macro_theme="", sub_theme="",
                             metadata={})
        corpus = Corpus(items=(item,),
                        source_files=(SourceFile("t", ItemKind.REGISTER, 1),),
                        schema=())
        config = DerivationConfig(threshold_x=0, exclusion_list=frozenset(),
                                  min_token_length=3)
        network = derive_network(corpus, build_dictionary(corpus, config), config)
        weights = [l.weight for l in network.links
                   if l.keyword_id == keyword_node_id("agua")]
        assert weights == [2]

    def test_bipartite_and_weights_on_random_corpora(self):
        rng = random.Random(3)
        config = DerivationConfig(threshold_x=1,
                                  exclusion_list=default_exclusions(),
                                  min_token_length=3)
        for _ in range(10):
            corpus = random_corpus(rng, max_items=30)
            dictionary = build_dictionary(corpus, config)
            network = derive_network(corpus, dictionary, config)
            items = {n.id for n in network.item_nodes()}
            keywords = {n.id for n in network.keyword_nodes()}
            by_id = {i.id: i for i in corpus.items}
            seen = set()
            for link in network.links:
                assert link.item_id in items and link.keyword_id in keywords
                assert link.weight >= 1
                assert (link.item_id, link.keyword_id) not in seen
                seen.add((link.item_id, link.keyword_id))
                term = network.node_by_id()[link.keyword_id].term
                assert link.weight == oracle_count(by_id[link.item_id], term, config)


class TestAssignClusters:
    def test_f1_argmax(self, f1_network):
        assignment = assign_clusters(f1_network)
        assert assignment.themes["I1"] == "vivienda"
        assert assignment.themes["I2"] == "salud"  # 3 > 1

    def test_f1_tie_breaks_by_corpus_frequency(self, f1_network):
        # I3 ties 2=2 between salud and servicios; salud wins on frequency 5 > 3
        assert assign_clusters(f1_network).themes["I3"] == "salud"

    def test_keyword_nodes_own_their_term(self, f1_network):
        assignment = assign_clusters(f1_network)
        for node in f1_network.keyword_nodes():
            assert assignment.themes[node.id] == node.term

    def test_linkless_item_unclassified(self, f1_corpus, f1_config):
        empty = KeywordDictionary(entries={}, config_fingerprint="x")
        network = derive_network(f1_corpus, empty, f1_config)
        assignment = assign_clusters(network)
        assert all(t == UNCLASSIFIED for t in assignment.themes.values())

    def test_lexicographic_tie_break(self, f1_corpus):
        # with X=0 give two terms equal weight and equal corpus frequency
        item = InventoryItem(id="A", name="agua bosque", kind=ItemKind.REGISTER,
                             macro_theme="", sub_theme="", metadata={})
        corpus = Corpus(items=(item,),
                        source_files=(SourceFile("t", ItemKind.REGISTER, 1),),
                        schema=())
        config = DerivationConfig(threshold_x=0, exclusion_list=frozenset(),
                                  min_token_length=3)
        network = derive_network(corpus, build_dictionary(corpus, config), config)
        assert assign_clusters(network).themes["A"] == "agua"

    def test_assignment_optimality_and_partition(self, f1_network):
        assignment = assign_clusters(f1_network)
        weights = {}
        by_id = f1_network.node_by_id()
        for link in f1_network.links:
            weights.setdefault(link.item_id, {})[by_id[link.keyword_id].term] = link.weight
        for item_id, per_term in weights.items():
            theme = assignment.themes[item_id]
            assert per_term[theme] >= max(per_term.values()) - 0  # argmax
        total = sum(assignment.member_counts().values())
        assert total == len(f1_network.nodes)

    def test_deterministic(self, f1_network):
        assert assign_clusters(f1_network) == assign_clusters(f1_network)


class TestThemeDistribution:
    def test_f1(self, f1_network):
        dist = theme_distribution(assign_clusters(f1_network))
        assert [(t, items) for t, items, _ in dist] == [
            ("salud", 2), ("vivienda", 1), ("servicios", 0)]
        assert all(kw == 1 for _, _, kw in dist)

    def test_empty_network(self, f1_corpus, f1_config):
        from inventory_atlas.network import ThematicNetwork
        network = ThematicNetwork(nodes=(), links=())
        assert theme_distribution(assign_clusters(network)) == []

    def test_single_theme(self):
        item = InventoryItem(id="A", name="agua agua", kind=ItemKind.REGISTER,
                             macro_theme="", sub_theme="", metadata={})
        corpus = Corpus(items=(item,),
                        source_files=(SourceFile("t", ItemKind.REGISTER, 1),),
                        schema=())
        config = DerivationConfig(threshold_x=0, exclusion_list=frozenset(),
                                  min_token_length=3)
        network = derive_network(corpus, build_dictionary(corpus, config), config)
        dist = theme_distribution(assign_clusters(network))
        assert dist == [("agua", 1, 1)]
