"""Shared fixtures: the three-item F1 corpus and brute-force oracles.

The oracle functions here re-derive expected values with naive nested
loops and their own tokenizer, independently of the library internals.
"""

from __future__ import annotations

import random
import re
import unicodedata
from collections import Counter

import pytest

from inventory_atlas.ingest import Corpus, InventoryItem, ItemKind, SourceFile
from inventory_atlas.keywords import DerivationConfig, default_exclusions


# --- independent oracle -------------------------------------------------

_ORACLE_SPLIT = re.compile(r"[^0-9a-z]+")


def oracle_tokens(text: str, exclusions: frozenset, min_len: int) -> list[str]:
    folded = unicodedata.normalize("NFKD", text.lower())
    folded = "".join(c for c in folded if not unicodedata.combining(c))
    out = []
    for tok in _ORACLE_SPLIT.split(folded):
        if tok and len(tok) >= min_len and tok not in exclusions:
            out.append(tok)
    return out


def oracle_item_tokens(item: InventoryItem, config: DerivationConfig) -> list[str]:
    texts = [item.name] + list(item.metadata.values())
    tokens = []
    for t in texts:
        tokens.extend(oracle_tokens(t, config.exclusion_list, config.min_token_length))
    return tokens


def oracle_dictionary(corpus: Corpus, config: DerivationConfig) -> dict:
    counts = Counter()
    for item in corpus.items:
        counts.update(oracle_item_tokens(item, config))
    return {t: n for t, n in counts.items() if n > config.threshold_x}


def oracle_count(item: InventoryItem, term: str, config: DerivationConfig) -> int:
    return oracle_item_tokens(item, config).count(term)


# --- F1 fixture ----------------------------------------------------------


def make_f1_corpus() -> Corpus:
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
                  source_files=(SourceFile("f1-reg", ItemKind.REGISTER, 2),
                                SourceFile("f1-op", ItemKind.OPERATION, 1)),
                  schema=("objetivo",))


def make_f1_config(threshold_x: int = 2) -> DerivationConfig:
    return DerivationConfig(
        threshold_x=threshold_x,
        exclusion_list=default_exclusions() | {"encuesta"},
        min_token_length=3)


@pytest.fixture
def f1_corpus() -> Corpus:
    return make_f1_corpus()


@pytest.fixture
def f1_config() -> DerivationConfig:
    return make_f1_config()


# --- random corpora -----------------------------------------------------

VOCAB = [
    "salud", "vivienda", "créditos", "educación", "transporte", "energía",
    "agricultura", "minería", "comercio", "empleo", "pobreza", "censo",
    "población", "servicios", "mercado", "finanzas", "ambiente", "agua",
    "industria", "turismo", "seguridad", "pensión", "impuestos", "exportación",
]
FILLER = ["de", "la", "el", "y", "en", "para", "del", "los", "las"]


def random_corpus(rng: random.Random, max_items: int = 50,
                  max_fields: int = 10) -> Corpus:
    n_items = rng.randint(1, max_items)
    n_fields = rng.randint(1, max_fields)
    field_names = [f"campo{j}" for j in range(n_fields)]
    items = []
    for i in range(n_items):
        def sentence():
            words = []
            for _ in range(rng.randint(0, 12)):
                pool = VOCAB if rng.random() < 0.7 else FILLER
                w = rng.choice(pool)
                if rng.random() < 0.3:
                    w = w.capitalize()
                words.append(w)
            return " ".join(words)

        items.append(InventoryItem(
            id=f"R{i}", name=sentence() or "sin nombre",
            kind=rng.choice([ItemKind.REGISTER, ItemKind.OPERATION]),
            macro_theme=rng.choice(["Económica", "Social", "Ambiental"]),
            sub_theme=rng.choice(["Salud", "Comercio", "Agua", ""]),
            metadata={f: sentence() for f in field_names}))
    return Corpus(items=tuple(items),
                  source_files=(SourceFile("rand", ItemKind.REGISTER, n_items),),
                  schema=tuple(field_names))
