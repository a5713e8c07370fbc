"""Pairwise compatibility of placements and conflict-graph construction.

Two placements are compatible when their footprints are disjoint and every
cross-placement pair of seated persons is either farther apart than the
minimum distance, separated by a wall (when the wall exemption is active),
or seated back to back (when the sitting-sense exemption is active).

Graph construction exploits translation invariance: whether two placements
of given kinds at a given block offset conflict (ignoring walls) does not
depend on where they sit in the room. A small conflict stencil per kind
pair is computed once and replayed over the grid, which keeps builds for
the largest rooms well under the five-second budget. Wall exemptions are
re-checked per pair since they depend on absolute positions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .geometry import EPS, Point, Segment, distance, segments_intersect
from .room import Block, Room
from .seating import KIND_ORDER, Chair, Kind, SittingConfiguration, make_configuration

SETTING_NAMES = ("baseline", "plexiglass", "sittingsense", "plexiglass+sittingsense")


@dataclass(frozen=True)
class Settings:
    """Which distancing exemptions are active, and the distance itself."""

    use_walls: bool = False
    use_sitting_sense: bool = False
    min_distance: float = 2.0

    def __post_init__(self):
        if self.min_distance <= 0:
            raise ValueError(f"min_distance must be positive, got {self.min_distance}")


def settings_from_name(name: str, min_distance: float = 2.0) -> Settings:
    key = name.strip().lower()
    if key not in SETTING_NAMES:
        raise ValueError(f"unknown setting '{name}' (expected one of {', '.join(SETTING_NAMES)})")
    return Settings(
        use_walls="plexiglass" in key,
        use_sitting_sense="sittingsense" in key,
        min_distance=min_distance,
    )


def back_to_back(u: Chair, v: Chair) -> bool:
    """True iff the two persons face in opposite senses, each away from the other."""
    if abs(u.sense.dot(v.sense) + 1.0) > EPS:
        return False
    rel_x = v.person.x - u.person.x
    rel_y = v.person.y - u.person.y
    # With antiparallel senses one strict test implies the other.
    return u.sense.dx * rel_x + u.sense.dy * rel_y < -EPS


def separated_by_wall(p: Point, q: Point, walls) -> bool:
    """True iff the sight line between two persons crosses at least one wall."""
    if p == q:
        return False
    sight = Segment(p, q)
    return any(segments_intersect(sight, w) for w in walls)


def compatible(a: SittingConfiguration, b: SittingConfiguration, room: Room,
               settings: Settings) -> bool:
    """Direct evaluation of the compatibility definition for one pair."""
    if a.footprint & b.footprint:
        return False
    for cu in a.chairs:
        for cv in b.chairs:
            if distance(cu.person, cv.person) > settings.min_distance:
                continue
            if settings.use_sitting_sense and back_to_back(cu, cv):
                continue
            if settings.use_walls and separated_by_wall(cu.person, cv.person, room.walls):
                continue
            return False
    return True


@dataclass(frozen=True)
class ConflictGraph:
    """Vertices are placement indices, weights their seat counts; an edge
    joins every incompatible pair. Edges are sorted (u < v, ascending)."""

    vertex_count: int
    weights: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> list[int]:
        """Neighbor bitmask per vertex."""
        adj = [0] * self.vertex_count
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj

    @cached_property
    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.adjacency]

    def is_independent(self, vertices) -> bool:
        picked = 0
        for u in vertices:
            bit = 1 << u
            if self.adjacency[u] & picked:
                return False
            picked |= bit
        return True

    def weight_of(self, vertices) -> int:
        return sum(self.weights[u] for u in vertices)


# Stencil entries: offset -> None for footprint overlap (unconditional edge),
# or the tuple of chair index pairs violating the distance rule (edge unless
# every such pair is wall-separated).
_StencilMap = dict[tuple[int, int], tuple[tuple[int, int], ...] | None]


@lru_cache(maxsize=32)
def _conflict_stencil(block_size: float, min_distance: float,
                      use_sitting_sense: bool) -> dict[tuple[Kind, Kind], _StencilMap]:
    radius = math.ceil(min_distance / block_size) + 4
    base = Block(radius + 3, radius + 3)
    stencil: dict[tuple[Kind, Kind], _StencilMap] = {}
    for ka in KIND_ORDER:
        a = make_configuration(0, ka, base, block_size)
        for kb in KIND_ORDER:
            entries: _StencilMap = {}
            for di in range(-radius, radius + 1):
                for dj in range(-radius, radius + 1):
                    b = make_configuration(
                        1, kb, Block(base.row + di, base.col + dj), block_size)
                    if a.footprint & b.footprint:
                        entries[(di, dj)] = None
                        continue
                    violating = []
                    for iu, cu in enumerate(a.chairs):
                        for iv, cv in enumerate(b.chairs):
                            if distance(cu.person, cv.person) > min_distance:
                                continue
                            if use_sitting_sense and back_to_back(cu, cv):
                                continue
                            violating.append((iu, iv))
                    if violating:
                        entries[(di, dj)] = tuple(violating)
            stencil[(ka, kb)] = entries
    return stencil


def build_conflict_graph(room: Room, configs: list[SittingConfiguration],
                         settings: Settings) -> ConflictGraph:
    stencil = _conflict_stencil(room.block_size, settings.min_distance,
                                settings.use_sitting_sense)
    kind_index = {k: i for i, k in enumerate(KIND_ORDER)}
    stride = room.cols + 2
    index = {}
    for cfg in configs:
        index[(kind_index[cfg.kind] * (room.rows + 2) + cfg.base.row) * stride
              + cfg.base.col] = cfg.id
    walls = room.walls if settings.use_walls else ()
    edges: list[tuple[int, int]] = []
    for cfg in configs:
        u = cfg.id
        row, col = cfg.base
        for kb in KIND_ORDER:
            kb_base = kind_index[kb] * (room.rows + 2)
            for (di, dj), pairs in stencil[(cfg.kind, kb)].items():
                r2, c2 = row + di, col + dj
                if not (1 <= r2 and 1 <= c2 <= room.cols):
                    continue
                v = index.get((kb_base + r2) * stride + c2)
                if v is None or v <= u:
                    continue
                if pairs is None or not walls:
                    edges.append((u, v))
                    continue
                other = configs[v]
                for iu, iv in pairs:
                    if not separated_by_wall(cfg.chairs[iu].person,
                                             other.chairs[iv].person, walls):
                        edges.append((u, v))
                        break
    edges.sort()
    return ConflictGraph(
        vertex_count=len(configs),
        weights=tuple(c.seats for c in configs),
        edges=tuple(edges),
    )


def write_dimacs(graph: ConflictGraph) -> str:
    """Text export: 'p edge V E' header, 'n u w' weights, 'e u v' edges (1-based)."""
    lines = [f"p edge {graph.vertex_count} {graph.edge_count}"]
    for u, w in enumerate(graph.weights, start=1):
        lines.append(f"n {u} {w}")
    for u, v in graph.edges:
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"
