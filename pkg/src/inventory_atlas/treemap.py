"""Squarified treemap partitioning (plus slice-and-dice for comparison)."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Rect:
    x: float
    y: float
    w: float
    h: float

    @property
    def area(self) -> float:
        return self.w * self.h

    def contains(self, px: float, py: float, pad: float = 0.0) -> bool:
        return (self.x - pad <= px <= self.x + self.w + pad
                and self.y - pad <= py <= self.y + self.h + pad)

    @property
    def center(self) -> tuple[float, float]:
        return (self.x + self.w / 2, self.y + self.h / 2)


@dataclass(frozen=True)
class TreemapCell:
    label: str
    rect: Rect
    weight: float


def treemap_partition(weights: list[tuple[str, float]], rect: Rect,
                      method: str = "squarified") -> list[TreemapCell]:
    """Tile `rect` with one cell per (label, weight), areas proportional to
    weights.  Weights must be positive.  Squarified placement greedily
    keeps row aspect ratios near 1; slice_dice splits along alternating
    axes in input order."""
    if not weights:
        raise ValueError("at least one weight required")
    for label, w in weights:
        if w <= 0:
            raise ValueError(f"non-positive weight for {label!r}: {w}")
    total = sum(w for _, w in weights)
    scale = rect.area / total
    areas = [(label, w, w * scale) for label, w in weights]
    if method == "squarified":
        areas = sorted(areas, key=lambda e: -e[2])  # descending, stable
        cells: list[TreemapCell] = []
        _squarify(areas, rect, cells)
        return cells
    if method == "slice_dice":
        return _slice_dice(areas, rect, vertical=rect.w >= rect.h)
    raise ValueError(f"unknown treemap method: {method!r}")


def _worst_ratio(row_areas: list[float], side: float) -> float:
    total = sum(row_areas)
    thickness = total / side
    worst = 0.0
    for a in row_areas:
        length = a / thickness
        worst = max(worst, length / thickness, thickness / length)
    return worst


def _squarify(areas: list[tuple], rect: Rect, out: list[TreemapCell]) -> None:
    remaining = rect
    i = 0
    while i < len(areas):
        side = min(remaining.w, remaining.h)
        row = [areas[i]]
        i += 1
        while i < len(areas):
            cur = [a for _, _, a in row]
            if _worst_ratio(cur + [areas[i][2]], side) <= _worst_ratio(cur, side):
                row.append(areas[i])
                i += 1
            else:
                break
        remaining = _lay_row(row, remaining, out)


def _lay_row(row: list[tuple], remaining: Rect, out: list[TreemapCell]) -> Rect:
    row_area = sum(a for _, _, a in row)
    if remaining.w >= remaining.h:
        # vertical strip on the left
        thickness = row_area / remaining.h
        cursor = remaining.y
        for label, weight, a in row:
            length = a / thickness
            out.append(TreemapCell(label, Rect(remaining.x, cursor, thickness, length), weight))
            cursor += length
        return Rect(remaining.x + thickness, remaining.y,
                    remaining.w - thickness, remaining.h)
    thickness = row_area / remaining.w
    cursor = remaining.x
    for label, weight, a in row:
        length = a / thickness
        out.append(TreemapCell(label, Rect(cursor, remaining.y, length, thickness), weight))
        cursor += length
    return Rect(remaining.x, remaining.y + thickness,
                remaining.w, remaining.h - thickness)


def _slice_dice(areas: list[tuple], rect: Rect, vertical: bool) -> list[TreemapCell]:
    total = sum(a for _, _, a in areas)
    cells = []
    cursor = rect.x if vertical else rect.y
    for label, weight, a in areas:
        frac = a / total
        if vertical:
            w = rect.w * frac
            cells.append(TreemapCell(label, Rect(cursor, rect.y, w, rect.h), weight))
            cursor += w
        else:
            h = rect.h * frac
            cells.append(TreemapCell(label, Rect(rect.x, cursor, rect.w, h), weight))
            cursor += h
    return cells
