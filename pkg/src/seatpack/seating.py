"""Enumeration of candidate table-plus-chairs placements on a room grid.

Four placement kinds exist: a one-block square table seating two (chairs
above/below or left/right) and a two-block rectangular table seating four
(two chairs per long side). A placement is valid when every block of its
footprint (table blocks plus chair blocks) is present in the room and clear
of obstacles.

Each seated person is modeled at the midpoint of the edge shared by their
chair block and the table block, i.e. half a block from the chair block
center toward the table; all person-to-person geometry uses these points.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .geometry import (
    DOWN,
    LEFT,
    Point,
    RIGHT,
    UP,
    UnitVec,
    rects_overlap_interior,
    segment_intersects_rect_interior,
)
from .room import Block, Room


class Kind(enum.Enum):
    SQUARE_VERTICAL = "SquareVertical"
    SQUARE_HORIZONTAL = "SquareHorizontal"
    RECT_HORIZONTAL = "RectHorizontal"
    RECT_VERTICAL = "RectVertical"

    def __str__(self) -> str:
        return self.value


# (table block offsets, chair (offset, facing) pairs) per kind, relative to
# the base block (i, j); offsets are (drow, dcol).
_KIND_TEMPLATES: dict[Kind, tuple[tuple[tuple[int, int], ...], tuple[tuple[tuple[int, int], UnitVec], ...]]] = {
    Kind.SQUARE_VERTICAL: (
        ((0, 0),),
        (((-1, 0), UP), ((1, 0), DOWN)),
    ),
    Kind.SQUARE_HORIZONTAL: (
        ((0, 0),),
        (((0, -1), RIGHT), ((0, 1), LEFT)),
    ),
    Kind.RECT_HORIZONTAL: (
        ((0, 0), (0, 1)),
        (((-1, 0), UP), ((-1, 1), UP), ((1, 0), DOWN), ((1, 1), DOWN)),
    ),
    Kind.RECT_VERTICAL: (
        ((0, 0), (1, 0)),
        (((0, -1), RIGHT), ((1, -1), RIGHT), ((0, 1), LEFT), ((1, 1), LEFT)),
    ),
}

KIND_ORDER = (
    Kind.SQUARE_VERTICAL,
    Kind.SQUARE_HORIZONTAL,
    Kind.RECT_HORIZONTAL,
    Kind.RECT_VERTICAL,
)


@dataclass(frozen=True)
class Chair:
    block: Block
    anchor: Point  # chair block center
    sense: UnitVec  # direction the seated person faces (toward the table)
    person: Point  # seated person: midpoint of the chair/table shared edge


@dataclass(frozen=True)
class SittingConfiguration:
    id: int
    kind: Kind
    base: Block  # block (i, j) the placement was generated from
    table_blocks: tuple[Block, ...]
    chairs: tuple[Chair, ...]
    seats: int
    footprint: frozenset[Block]
    center: Point  # centroid of the table blocks


def _block_center(b: Block, L: float) -> Point:
    return Point((b.col - 0.5) * L, (b.row - 0.5) * L)


def make_configuration(cid: int, kind: Kind, base: Block, block_size: float) -> SittingConfiguration:
    """Build the placement of the given kind anchored at the base block."""
    L = block_size
    table_offsets, chair_specs = _KIND_TEMPLATES[kind]
    tables = tuple(Block(base.row + dr, base.col + dc) for dr, dc in table_offsets)
    chairs = []
    for (dr, dc), sense in chair_specs:
        b = Block(base.row + dr, base.col + dc)
        anchor = _block_center(b, L)
        person = Point(anchor.x + sense.dx * L / 2.0, anchor.y + sense.dy * L / 2.0)
        chairs.append(Chair(block=b, anchor=anchor, sense=sense, person=person))
    footprint = frozenset(tables) | frozenset(c.block for c in chairs)
    cx = sum(_block_center(t, L).x for t in tables) / len(tables)
    cy = sum(_block_center(t, L).y for t in tables) / len(tables)
    return SittingConfiguration(
        id=cid,
        kind=kind,
        base=base,
        table_blocks=tables,
        chairs=tuple(chairs),
        seats=len(chairs),
        footprint=footprint,
        center=Point(cx, cy),
    )


def clear_blocks(room: Room) -> set[Block]:
    """Blocks present in the room whose interior is free of obstacles."""
    clear: set[Block] = set()
    for row in range(1, room.rows + 1):
        for col in range(1, room.cols + 1):
            b = Block(row, col)
            if not room.block_exists(b):
                continue
            rect = room.block_rect(b)
            if any(rects_overlap_interior(rect, o) for o in room.soft_obstacles):
                continue
            if any(segment_intersects_rect_interior(w, rect) for w in room.walls):
                continue
            clear.add(b)
    return clear


def enumerate_configurations(room: Room) -> list[SittingConfiguration]:
    """All valid placements in deterministic scan order.

    Scan is row-major over base blocks with kinds in KIND_ORDER; ids are
    assigned consecutively from 0 in that order.
    """
    clear = clear_blocks(room)
    out: list[SittingConfiguration] = []
    for row in range(1, room.rows + 1):
        for col in range(1, room.cols + 1):
            base = Block(row, col)
            for kind in KIND_ORDER:
                cfg = make_configuration(len(out), kind, base, room.block_size)
                if all(b in clear for b in cfg.footprint):
                    out.append(cfg)
    return out
