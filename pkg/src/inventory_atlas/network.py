"""Bipartite item-keyword network and theme cluster assignment."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .ingest import Corpus, ItemKind
from .keywords import DerivationConfig, KeywordDictionary, item_tokens

UNCLASSIFIED = "unclassified"

ROLE_ITEM = "item"
ROLE_KEYWORD = "keyword"


def keyword_node_id(term: str) -> str:
    return f"kw:{term}"


@dataclass(frozen=True)
class Node:
    id: str
    role: str  # ROLE_ITEM or ROLE_KEYWORD
    name: str = ""             # items only
    kind: ItemKind | None = None  # items only
    term: str = ""             # keywords only
    frequency: int = 0         # keywords only: corpus frequency


@dataclass(frozen=True)
class Link:
    item_id: str
    keyword_id: str
    weight: int


@dataclass(frozen=True)
class ThematicNetwork:
    nodes: tuple
    links: tuple

    def node_by_id(self) -> dict:
        return {n.id: n for n in self.nodes}

    def item_nodes(self) -> list[Node]:
        return [n for n in self.nodes if n.role == ROLE_ITEM]

    def keyword_nodes(self) -> list[Node]:
        return [n for n in self.nodes if n.role == ROLE_KEYWORD]


@dataclass(frozen=True)
class ClusterAssignment:
    themes: dict  # node id -> theme label (keyword term or UNCLASSIFIED)
    item_counts: dict  # theme -> item node count
    keyword_counts: dict  # theme -> keyword node count

    def member_counts(self) -> dict:
        """Total member nodes (items + keyword node) per theme."""
        themes = set(self.item_counts) | set(self.keyword_counts)
        return {t: self.item_counts.get(t, 0) + self.keyword_counts.get(t, 0)
                for t in themes}


def derive_network(corpus: Corpus, dictionary: KeywordDictionary,
                   config: DerivationConfig) -> ThematicNetwork:
    """One node per item plus one per dictionary term; a link wherever an
    item's counted text contains the term, weighted by occurrence count."""
    nodes = [Node(id=item.id, role=ROLE_ITEM, name=item.name, kind=item.kind)
             for item in corpus.items]
    nodes.extend(Node(id=keyword_node_id(term), role=ROLE_KEYWORD,
                      term=term, frequency=freq)
                 for term, freq in dictionary.entries.items())
    links = []
    for item in corpus.items:
        # one tokenization per item; equivalent to count_matches per term
        counts = Counter(item_tokens(item, config))
        for term in dictionary.entries:
            weight = counts.get(term, 0)
            if weight >= 1:
                links.append(Link(item_id=item.id,
                                  keyword_id=keyword_node_id(term),
                                  weight=weight))
    return ThematicNetwork(nodes=tuple(nodes), links=tuple(links))


def assign_clusters(network: ThematicNetwork) -> ClusterAssignment:
    """Each item joins the theme of its heaviest-linked keyword.

    Ties break toward the keyword with the larger corpus frequency, then
    the lexicographically smaller term.  Linkless items are UNCLASSIFIED;
    keyword nodes belong to their own term.
    """
    by_id = network.node_by_id()
    best: dict[str, tuple] = {}
    for link in network.links:
        kw = by_id[link.keyword_id]
        key = (link.weight, kw.frequency, _neg_lex(kw.term))
        if link.item_id not in best or key > best[link.item_id][0]:
            best[link.item_id] = (key, kw.term)

    themes: dict[str, str] = {}
    item_counts: dict[str, int] = {}
    keyword_counts: dict[str, int] = {}
    for node in network.nodes:
        if node.role == ROLE_KEYWORD:
            themes[node.id] = node.term
            keyword_counts[node.term] = keyword_counts.get(node.term, 0) + 1
            item_counts.setdefault(node.term, 0)
        else:
            theme = best[node.id][1] if node.id in best else UNCLASSIFIED
            themes[node.id] = theme
            item_counts[theme] = item_counts.get(theme, 0) + 1
    return ClusterAssignment(themes=themes, item_counts=item_counts,
                             keyword_counts=keyword_counts)


class _neg_lex(str):
    """Reverses lexicographic comparison so max() prefers the smaller term."""

    def __lt__(self, other):
        return str.__gt__(self, other)

    def __gt__(self, other):
        return str.__lt__(self, other)


def theme_distribution(assignment: ClusterAssignment) -> list[tuple]:
    """(theme, item count, keyword-node count), item count descending,
    ties lexicographic."""
    themes = sorted(set(assignment.item_counts) | set(assignment.keyword_counts),
                    key=lambda t: (-assignment.item_counts.get(t, 0), t))
    return [(t, assignment.item_counts.get(t, 0), assignment.keyword_counts.get(t, 0))
            for t in themes]
