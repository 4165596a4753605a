"""Keyword dictionary derivation: tokenize metadata, filter, threshold by corpus frequency."""

from __future__ import annotations

import hashlib
import logging
import re
import unicodedata
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources

from .ingest import Corpus, InventoryItem

logger = logging.getLogger(__name__)

_TOKEN_SPLIT = re.compile(r"[^a-z0-9ñ]+")

ALL_FIELDS = "all"


def default_exclusions() -> frozenset[str]:
    """Exclusion list shipped with the package: Spanish stopwords plus
    catalog boilerplate terms.  Entries are already normalized."""
    text = resources.files("inventory_atlas.data").joinpath("exclusiones_es.txt").read_text("utf-8")
    return parse_exclusion_file(text)


def parse_exclusion_file(text: str) -> frozenset[str]:
    """One token per line; '#' starts a comment."""
    tokens = set()
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            tokens.add(fold_text(line))
    return frozenset(tokens)


@dataclass(frozen=True)
class DerivationConfig:
    threshold_x: int = 10            # keep term iff corpus count > threshold_x
    exclusion_list: frozenset = field(default_factory=default_exclusions)
    min_token_length: int = 3
    fields_included: tuple = (ALL_FIELDS,)  # metadata columns; name is always counted

    def __post_init__(self):
        if self.threshold_x < 0:
            raise ValueError("threshold_x must be >= 0")
        if self.min_token_length < 1:
            raise ValueError("min_token_length must be >= 1")

    def fingerprint(self) -> str:
        payload = "|".join([
            str(self.threshold_x),
            str(self.min_token_length),
            ",".join(self.fields_included),
            ",".join(sorted(self.exclusion_list)),
        ])
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:16]


@dataclass(frozen=True)
class KeywordDictionary:
    entries: dict  # normalized term -> corpus frequency
    config_fingerprint: str

    def __contains__(self, term: str) -> bool:
        return term in self.entries


def fold_text(raw: str) -> str:
    """Lowercase and strip Latin diacritics (á→a, ñ→n, ü→u)."""
    decomposed = unicodedata.normalize("NFKD", raw.lower())
    return "".join(ch for ch in decomposed if not unicodedata.combining(ch))


def normalize_text(raw: str, config: DerivationConfig) -> list[str]:
    """Split on non-alphanumeric runs, fold case/accents, drop short tokens
    and excluded tokens.  Order and duplicates are preserved."""
    folded = fold_text(raw)
    tokens = [t for t in _TOKEN_SPLIT.split(folded) if t]
    return [t for t in tokens
            if len(t) >= config.min_token_length and t not in config.exclusion_list]


def included_texts(item: InventoryItem, config: DerivationConfig) -> list[str]:
    """Texts counted for an item: the name plus the configured metadata
    columns.  The original macro/sub classification is never counted; the
    derived themes must come from the descriptive metadata alone."""
    texts = [item.name]
    if ALL_FIELDS in config.fields_included:
        texts.extend(item.metadata.values())
    else:
        texts.extend(item.metadata[col] for col in config.fields_included
                     if col in item.metadata)
    return texts


def item_tokens(item: InventoryItem, config: DerivationConfig) -> list[str]:
    tokens: list[str] = []
    for text in included_texts(item, config):
        tokens.extend(normalize_text(text, config))
    return tokens


def build_dictionary(corpus: Corpus, config: DerivationConfig) -> KeywordDictionary:
    """Corpus-wide term frequencies, keeping terms occurring strictly more
    than threshold_x times."""
    counts: Counter = Counter()
    for item in corpus.items:
        counts.update(item_tokens(item, config))
    entries = {term: n for term, n in counts.items() if n > config.threshold_x}
    # stable order: frequency descending, then term
    entries = dict(sorted(entries.items(), key=lambda kv: (-kv[1], kv[0])))
    if not entries:
        logger.warning("empty keyword dictionary (threshold_x=%d)", config.threshold_x)
    return KeywordDictionary(entries=entries, config_fingerprint=config.fingerprint())


def count_matches(item: InventoryItem, term: str, config: DerivationConfig) -> int:
    """Occurrences of a normalized term across the item's counted texts."""
    return sum(1 for token in item_tokens(item, config) if token == term)
