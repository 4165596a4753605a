"""Composite layouts: grouped treemap, keyword radial, plain force."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ingest import Corpus
from .keywords import DerivationConfig, count_matches, normalize_text
from .network import ROLE_ITEM, ThematicNetwork, ClusterAssignment, keyword_node_id
from .simulation import (SimulationParams, Viewport, center_force, collision_force,
                         gravity_force, init_positions, link_force, many_body_force,
                         radial_force, simulate)
from .treemap import Rect, TreemapCell, treemap_partition

GROUPED_TREEMAP = "grouped_treemap"
RADIAL = "radial"
PLAIN_FORCE = "plain_force"


class KeywordExcludedError(ValueError):
    """The query keyword vanished under normalization (stopword etc.)."""


@dataclass(frozen=True)
class RadialParams:
    """Ring radii as fractions of R_view = min(width, height) / 2."""
    inner_fraction: float = 0.10
    outer_fraction: float = 0.60
    border_fraction: float = 0.95
    pull_strength: float = 0.8

    def __post_init__(self):
        if not (0.0 < self.inner_fraction < self.outer_fraction
                < self.border_fraction <= 1.0):
            raise ValueError("require 0 < inner < outer < border <= 1")

    def radii(self, viewport: Viewport) -> tuple[float, float, float]:
        r_view = min(viewport.width, viewport.height) / 2.0
        return (self.inner_fraction * r_view,
                self.outer_fraction * r_view,
                self.border_fraction * r_view)


@dataclass(frozen=True)
class NodePlacement:
    id: str
    x: float
    y: float
    cell: str | None = None          # grouped layout: theme cell label
    target_radius: float | None = None  # radial layout
    match_count: int | None = None      # radial layout, items + queried keyword


@dataclass(frozen=True)
class LayoutResult:
    kind: str
    placements: tuple          # NodePlacement per network node, input order
    cells: tuple = ()          # grouped: TreemapCell
    center: tuple | None = None  # radial: (cx, cy)
    ring_radii: tuple | None = None  # radial: (inner, outer, border)
    params: dict | None = None
    final_mean_displacement: float = 0.0

    def position_of(self, node_id: str) -> tuple[float, float]:
        for p in self.placements:
            if p.id == node_id:
                return (p.x, p.y)
        raise KeyError(node_id)


def _params_echo(params: SimulationParams, **extra) -> dict:
    echo = {
        "seed": params.seed, "ticks": params.ticks,
        "alpha_start": params.alpha_start, "alpha_min": params.alpha_min,
        "alpha_decay": params.effective_alpha_decay(),
        "velocity_decay": params.velocity_decay,
        "repulsion_strength": params.repulsion_strength,
        "link_distance": params.link_distance,
        "link_strength_intra": params.link_strength_intra,
        "link_strength_inter": params.link_strength_inter,
        "collision_radius": params.collision_radius,
        "group_gravity": params.group_gravity,
        "width": params.viewport.width, "height": params.viewport.height,
    }
    echo.update(extra)
    return echo


def target_radius(count: int, c_max: int, c_min: int, r_inner: float,
                  r_outer: float, r_border: float) -> float:
    """Ring radius for a node with `count` keyword matches.

    Zero matches rest at the border ring; when every matched node shares
    the same count they all sit at the inner ring; otherwise the radius
    interpolates linearly, higher counts closer to the center.
    """
    if count <= 0:
        return r_border
    if c_max == c_min:
        return r_inner
    return r_inner + (r_outer - r_inner) * (c_max - count) / (c_max - c_min)


def layout_grouped(network: ThematicNetwork, assignment: ClusterAssignment,
                   params: SimulationParams,
                   treemap_method: str = "squarified") -> LayoutResult:
    """Force-in-a-box style layout: themes get treemap cells sized by member
    count; nodes are pulled toward their cell center while springs and
    repulsion arrange them inside."""
    weights = assignment.member_counts()
    ordered = sorted(weights.items(), key=lambda kv: (-kv[1], kv[0]))
    rect = Rect(0.0, 0.0, params.viewport.width, params.viewport.height)
    cells = treemap_partition(ordered, rect, method=treemap_method)
    cell_by_theme = {c.label: c for c in cells}

    nodes = network.nodes
    index = {n.id: i for i, n in enumerate(nodes)}
    centers = np.array([cell_by_theme[assignment.themes[n.id]].rect.center
                        for n in nodes])
    links = []
    for link in network.links:
        same = assignment.themes[link.item_id] == assignment.themes[link.keyword_id]
        strength = params.link_strength_intra if same else params.link_strength_inter
        links.append((index[link.item_id], index[link.keyword_id], strength))

    forces = [
        many_body_force(params.repulsion_strength),
        link_force(links, params.link_distance),
        gravity_force(centers, params.group_gravity),
        collision_force(params.collision_radius),
    ]
    pos0 = init_positions(len(nodes), params.seed, params.viewport)
    outcome = simulate(pos0, forces, params)
    placements = tuple(
        NodePlacement(id=n.id, x=float(outcome.positions[i, 0]),
                      y=float(outcome.positions[i, 1]),
                      cell=assignment.themes[n.id])
        for i, n in enumerate(nodes))
    return LayoutResult(kind=GROUPED_TREEMAP, placements=placements,
                        cells=tuple(cells),
                        params=_params_echo(params, treemap_method=treemap_method),
                        final_mean_displacement=outcome.final_mean_displacement)


def layout_radial(corpus: Corpus, network: ThematicNetwork, keyword: str,
                  config: DerivationConfig, params: SimulationParams,
                  radial_params: RadialParams | None = None) -> LayoutResult:
    """Radial keyword layout: items are pulled to rings whose radius shrinks
    with their match count for the queried keyword; non-matching nodes and
    foreign keyword nodes rest at the border ring; the queried keyword node,
    if present, anchors the center."""
    radial_params = radial_params or RadialParams()
    tokens = normalize_text(keyword, config)
    if not tokens:
        raise KeywordExcludedError("keyword excluded by normalization")
    term = tokens[0]
    extra_tokens = tokens[1:]

    r_inner, r_outer, r_border = radial_params.radii(params.viewport)
    items = {item.id: item for item in corpus.items}
    counts: dict[str, int] = {}
    for node in network.nodes:
        if node.role == ROLE_ITEM:
            counts[node.id] = count_matches(items[node.id], term, config)
    matched = [c for c in counts.values() if c > 0]
    c_max = max(matched) if matched else 0
    c_min = min(matched) if matched else 0

    queried_id = keyword_node_id(term)
    targets = []
    match_counts: list[int | None] = []
    for node in network.nodes:
        if node.role == ROLE_ITEM:
            c = counts[node.id]
            targets.append(target_radius(c, c_max, c_min, r_inner, r_outer, r_border))
            match_counts.append(c)
        elif node.id == queried_id:
            targets.append(0.0)
            match_counts.append(None)
        else:
            targets.append(r_border)
            match_counts.append(None)

    center = params.viewport.center
    forces = [
        many_body_force(params.repulsion_strength),
        radial_force(np.array(targets), center, radial_params.pull_strength),
        collision_force(params.collision_radius),
    ]
    pos0 = init_positions(len(network.nodes), params.seed, params.viewport)
    outcome = simulate(pos0, forces, params)
    placements = tuple(
        NodePlacement(id=n.id, x=float(outcome.positions[i, 0]),
                      y=float(outcome.positions[i, 1]),
                      target_radius=float(targets[i]), match_count=match_counts[i])
        for i, n in enumerate(network.nodes))
    return LayoutResult(kind=RADIAL, placements=placements, center=center,
                        ring_radii=(r_inner, r_outer, r_border),
                        params=_params_echo(params, keyword=term,
                                            ignored_tokens=list(extra_tokens),
                                            radial_strength=radial_params.pull_strength),
                        final_mean_displacement=outcome.final_mean_displacement)


def layout_plain(network: ThematicNetwork, params: SimulationParams) -> LayoutResult:
    """Ungrouped force layout (debug only; the shipped grouping idiom is the
    treemap)."""
    nodes = network.nodes
    index = {n.id: i for i, n in enumerate(nodes)}
    links = [(index[l.item_id], index[l.keyword_id], params.link_strength_intra)
             for l in network.links]
    forces = [
        many_body_force(params.repulsion_strength),
        link_force(links, params.link_distance),
        center_force(params.viewport.center, params.center_strength),
        collision_force(params.collision_radius),
    ]
    pos0 = init_positions(len(nodes), params.seed, params.viewport)
    outcome = simulate(pos0, forces, params)
    placements = tuple(
        NodePlacement(id=n.id, x=float(outcome.positions[i, 0]),
                      y=float(outcome.positions[i, 1]))
        for i, n in enumerate(nodes))
    return LayoutResult(kind=PLAIN_FORCE, placements=placements,
                        params=_params_echo(params),
                        final_mean_displacement=outcome.final_mean_displacement)
