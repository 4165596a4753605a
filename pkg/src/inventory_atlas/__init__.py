"""inventory-atlas: keyword-derived thematic classification and deterministic
coordinated layouts for register/operation inventories."""

from .ingest import (Corpus, InventoryItem, ItemKind, SchemaConfig,
                     merge_inventories, parse_inventory, validate_corpus)
from .keywords import (DerivationConfig, KeywordDictionary, build_dictionary,
                       count_matches, normalize_text)
from .network import (ClusterAssignment, ThematicNetwork, assign_clusters,
                      derive_network, theme_distribution)
from .layouts import (LayoutResult, RadialParams, layout_grouped, layout_plain,
                      layout_radial, target_radius)
from .simulation import SimulationParams, Viewport, init_positions, simulate
from .treemap import Rect, TreemapCell, treemap_partition
from .analytics import item_detail, rank_by_keyword, summarize
from .snapshot import Snapshot, build_snapshot

__version__ = "0.1.0"
