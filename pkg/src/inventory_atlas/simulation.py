"""Deterministic seeded force simulation.

Velocity-Verlet-free, d3-style integration: per tick the cooling factor
alpha decays geometrically, every force accumulates velocity scaled by
alpha (collision excepted), velocities are damped, then positions are
integrated.  All force accumulation is vectorized numpy over float64 in a
fixed order, so a given (inputs, seed) pair always produces the same
positions bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from numba import njit

GOLDEN_ANGLE = math.pi * (3.0 - math.sqrt(5.0))
SPIRAL_STEP = 10.0  # spiral radius = SPIRAL_STEP * sqrt(i)

_LCG_MULT = 6364136223846793005
_LCG_INC = 1442695040888963407
_U64 = (1 << 64) - 1


class SimulationError(RuntimeError):
    """Non-finite positions: a force blew up."""


@dataclass(frozen=True)
class Viewport:
    width: float = 960.0
    height: float = 640.0

    @property
    def center(self) -> tuple[float, float]:
        return (self.width / 2.0, self.height / 2.0)


@dataclass(frozen=True)
class SimulationParams:
    seed: int = 42
    ticks: int = 300
    alpha_start: float = 1.0
    alpha_min: float = 0.001
    alpha_decay: float | None = None  # default: 1 - alpha_min**(1/ticks)
    velocity_decay: float = 0.4
    repulsion_strength: float = -30.0
    link_distance: float = 30.0
    link_strength_intra: float = 1.0
    link_strength_inter: float = 0.1
    collision_radius: float = 6.0
    group_gravity: float = 0.1
    radial_strength: float = 0.8
    center_strength: float = 0.1
    viewport: Viewport = field(default_factory=Viewport)

    def __post_init__(self):
        if self.ticks < 1:
            raise ValueError("ticks must be >= 1")
        decay = self.effective_alpha_decay()
        if not (0.0 < decay < 1.0):
            raise ValueError("alpha_decay must be in (0, 1)")
        if self.viewport.width <= 0 or self.viewport.height <= 0:
            raise ValueError("viewport must be positive")

    def effective_alpha_decay(self) -> float:
        if self.alpha_decay is not None:
            return self.alpha_decay
        return 1.0 - self.alpha_min ** (1.0 / self.ticks)


def _lcg_uniform(seed: int, count: int) -> np.ndarray:
    """count floats in [0, 1) from a 64-bit linear congruential generator
    (Knuth MMIX constants).  Frozen: layout jitter must never drift across
    library versions."""
    state = (seed ^ 0x9E3779B97F4A7C15) & _U64
    out = np.empty(count, dtype=np.float64)
    for i in range(count):
        state = (state * _LCG_MULT + _LCG_INC) & _U64
        out[i] = (state >> 11) / float(1 << 53)
    return out


def init_positions(n: int, seed: int, viewport: Viewport) -> np.ndarray:
    """Phyllotaxis spiral around the viewport center, each point perturbed
    by a seeded jitter in [-0.5, 0.5] units per axis."""
    cx, cy = viewport.center
    pos = np.empty((n, 2), dtype=np.float64)
    for i in range(n):
        r = SPIRAL_STEP * math.sqrt(i)
        theta = i * GOLDEN_ANGLE
        pos[i, 0] = cx + r * math.cos(theta)
        pos[i, 1] = cy + r * math.sin(theta)
    jitter = _lcg_uniform(seed, 2 * n).reshape(n, 2) - 0.5
    return pos + jitter


# --- forces: callables f(pos, vel, alpha) mutating vel in place ---------


def many_body_force(strength: float):
    """Exact pairwise charge: vel_i += (p_j - p_i) * strength * alpha / d2.
    Negative strength repels.  d2 is clamped below at 1 to bound blow-up
    for near-coincident nodes."""

    def apply(pos, vel, alpha):
        if len(pos) >= 2:
            _many_body_kernel(pos, vel, alpha, strength)

    return apply


@njit(cache=True)
def _many_body_kernel(pos, vel, alpha, strength):  # pragma: no cover - jitted
    n = pos.shape[0]
    for i in range(n):
        fx = 0.0
        fy = 0.0
        xi = pos[i, 0]
        yi = pos[i, 1]
        for j in range(n):
            if j == i:
                continue
            dx = pos[j, 0] - xi
            dy = pos[j, 1] - yi
            d2 = dx * dx + dy * dy
            if d2 < 1.0:
                d2 = 1.0
            w = strength * alpha / d2
            fx += dx * w
            fy += dy * w
        vel[i, 0] += fx
        vel[i, 1] += fy


def link_force(links: list[tuple[int, int, float]], distance: float):
    """Spring per link (source idx, target idx, strength) with rest length
    `distance`.

    The configured strength is divided by the smaller endpoint degree and
    the correction is split in proportion to the degrees (a hub moves
    less); without this a node with many springs accumulates an unbounded
    correction and the integration explodes.
    """
    if links:
        src = np.array([l[0] for l in links], dtype=np.intp)
        dst = np.array([l[1] for l in links], dtype=np.intp)
        degree: dict[int, int] = {}
        for s, t, _ in links:
            degree[s] = degree.get(s, 0) + 1
            degree[t] = degree.get(t, 0) + 1
        strength = np.array(
            [l[2] / min(degree[l[0]], degree[l[1]]) for l in links],
            dtype=np.float64)
        bias = np.array(
            [degree[l[0]] / (degree[l[0]] + degree[l[1]]) for l in links],
            dtype=np.float64)

    def apply(pos, vel, alpha):
        if not links:
            return
        p = pos + vel
        x = p[dst] - p[src]
        d = np.sqrt(np.einsum("ij,ij->i", x, x))
        np.maximum(d, 1e-9, out=d)
        k = (d - distance) / d * alpha * strength
        delta = x * k[:, None]
        np.subtract.at(vel, dst, delta * bias[:, None])
        np.add.at(vel, src, delta * (1.0 - bias)[:, None])

    return apply


def collision_force(radius: float):
    """Push apart nodes whose predicted positions overlap (uniform radius).
    Not alpha-scaled: overlap resolution should not cool away."""

    def apply(pos, vel, alpha):
        if len(pos) >= 2:
            _collision_kernel(pos, vel, radius)

    return apply


@njit(cache=True)
def _collision_kernel(pos, vel, radius):  # pragma: no cover - jitted
    n = pos.shape[0]
    min_d = 2.0 * radius
    min_d2 = min_d * min_d
    p = pos + vel  # predicted positions, snapshot before any correction
    for i in range(n):
        fx = 0.0
        fy = 0.0
        xi = p[i, 0]
        yi = p[i, 1]
        for j in range(n):
            if j == i:
                continue
            dx = p[j, 0] - xi
            dy = p[j, 1] - yi
            d2 = dx * dx + dy * dy
            if d2 <= 0.0 or d2 >= min_d2:
                continue
            d = math.sqrt(d2)
            push = (min_d - d) / d * 0.5
            fx -= dx * push
            fy -= dy * push
        vel[i, 0] += fx
        vel[i, 1] += fy


def gravity_force(targets: np.ndarray, strength: float):
    """Pull every node toward its own target point (cluster cell center)."""
    targets = np.asarray(targets, dtype=np.float64)

    def apply(pos, vel, alpha):
        vel += (targets - pos) * (strength * alpha)

    return apply


def center_force(center: tuple[float, float], strength: float):
    c = np.asarray(center, dtype=np.float64)

    def apply(pos, vel, alpha):
        vel += (c - pos) * (strength * alpha)

    return apply


def radial_force(target_radii: np.ndarray, center: tuple[float, float], strength: float):
    """Pull each node toward its target ring around `center`."""
    targets = np.asarray(target_radii, dtype=np.float64)
    c = np.asarray(center, dtype=np.float64)

    def apply(pos, vel, alpha):
        d = pos - c
        r = np.sqrt(np.einsum("ij,ij->i", d, d))
        safe_r = np.maximum(r, 1e-9)
        k = (targets - r) * (strength * alpha) / safe_r
        vel += d * k[:, None]

    return apply


@dataclass(frozen=True)
class SimulationOutcome:
    positions: np.ndarray
    final_mean_displacement: float
    ticks_run: int


def simulate(positions: np.ndarray, forces: list, params: SimulationParams) -> SimulationOutcome:
    """Run exactly params.ticks ticks and return final positions.

    Raises SimulationError naming the tick if any position goes non-finite.
    """
    pos = np.array(positions, dtype=np.float64, copy=True)
    vel = np.zeros_like(pos)
    alpha = params.alpha_start
    decay = params.effective_alpha_decay()
    damping = 1.0 - params.velocity_decay
    mean_disp = 0.0
    for tick in range(1, params.ticks + 1):
        alpha *= 1.0 - decay
        for force in forces:
            force(pos, vel, alpha)
        vel *= damping
        pos += vel
        if not np.isfinite(pos).all():
            raise SimulationError(f"non-finite position at tick {tick}")
        if tick == params.ticks and len(pos):
            mean_disp = float(np.mean(np.sqrt(np.einsum("ij,ij->i", vel, vel))))
    return SimulationOutcome(positions=pos, final_mean_displacement=mean_disp,
                             ticks_run=params.ticks)
