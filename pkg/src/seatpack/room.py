"""The discretized dining room: a grid of square blocks plus obstacles.

Coordinate convention (fixed package-wide): origin at the room's bottom-left
corner, x grows with the column index, y grows with the row index. Block
(row, col) is 1-based and spans [(col-1)*L, col*L] x [(row-1)*L, row*L]
where L is the block size in meters.

Room file format (UTF-8, line based, ``#`` starts a comment)::

    room <rows> <cols> <block_size_m>     exactly once, first directive
    missing <row> <col>                   zero or more
    soft <x1> <y1> <x2> <y2>              zero or more (rectangle corners)
    wall <x1> <y1> <x2> <y2>              zero or more (segment endpoints)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .geometry import EPS, Point, Rect, Segment

DEFAULT_BLOCK_SIZE = 0.7


class Block(NamedTuple):
    row: int
    col: int


class RoomFormatError(ValueError):
    """Raised when a room file cannot be parsed or fails validation."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class Room:
    rows: int
    cols: int
    block_size: float = DEFAULT_BLOCK_SIZE
    missing: frozenset[Block] = field(default_factory=frozenset)
    soft_obstacles: tuple[Rect, ...] = ()
    walls: tuple[Segment, ...] = ()

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError(f"room needs at least one block, got {self.rows}x{self.cols}")
        if self.block_size <= 0:
            raise ValueError(f"block size must be positive, got {self.block_size}")
        object.__setattr__(self, "missing", frozenset(Block(*b) for b in self.missing))
        object.__setattr__(self, "soft_obstacles", tuple(self.soft_obstacles))
        object.__setattr__(self, "walls", tuple(self.walls))
        for b in self.missing:
            if not self.in_range(b):
                raise ValueError(f"missing block {b} out of range")
        w, h = self.width, self.height
        for r in self.soft_obstacles:
            if r.lo.x < -EPS or r.lo.y < -EPS or r.hi.x > w + EPS or r.hi.y > h + EPS:
                raise ValueError(f"soft obstacle {r} exceeds room bounds {w}x{h}")
        for s in self.walls:
            for p in (s.a, s.b):
                if p.x < -EPS or p.y < -EPS or p.x > w + EPS or p.y > h + EPS:
                    raise ValueError(f"wall endpoint {p} outside room bounds {w}x{h}")

    @property
    def width(self) -> float:
        return self.cols * self.block_size

    @property
    def height(self) -> float:
        return self.rows * self.block_size

    def in_range(self, b: Block) -> bool:
        return 1 <= b.row <= self.rows and 1 <= b.col <= self.cols

    def block_exists(self, b: Block) -> bool:
        return self.in_range(b) and b not in self.missing

    def block_rect(self, b: Block) -> Rect:
        if not self.block_exists(b):
            raise ValueError(f"invalid block {tuple(b)}")
        L = self.block_size
        return Rect(
            Point((b.col - 1) * L, (b.row - 1) * L),
            Point(b.col * L, b.row * L),
        )


def block_rect(room: Room, b: Block) -> Rect:
    return room.block_rect(b)


def parse_room(text: str) -> Room:
    """Parse the line-based room format; raises RoomFormatError on bad input."""
    header: tuple[int, int, float] | None = None
    missing: list[Block] = []
    soft: list[Rect] = []
    walls: list[Segment] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        key, args = fields[0], fields[1:]
        if key == "room":
            if header is not None:
                raise RoomFormatError(line_no, "duplicate room header")
            if len(args) != 3:
                raise RoomFormatError(line_no, "expected: room <rows> <cols> <block_size>")
            try:
                header = (int(args[0]), int(args[1]), float(args[2]))
            except ValueError as exc:
                raise RoomFormatError(line_no, str(exc)) from exc
            continue
        if header is None:
            raise RoomFormatError(line_no, f"'{key}' before room header")
        try:
            if key == "missing":
                if len(args) != 2:
                    raise ValueError("expected: missing <row> <col>")
                missing.append(Block(int(args[0]), int(args[1])))
            elif key == "soft":
                if len(args) != 4:
                    raise ValueError("expected: soft <x1> <y1> <x2> <y2>")
                x1, y1, x2, y2 = map(float, args)
                soft.append(Rect(Point(min(x1, x2), min(y1, y2)),
                                 Point(max(x1, x2), max(y1, y2))))
            elif key == "wall":
                if len(args) != 4:
                    raise ValueError("expected: wall <x1> <y1> <x2> <y2>")
                x1, y1, x2, y2 = map(float, args)
                walls.append(Segment(Point(x1, y1), Point(x2, y2)))
            else:
                raise ValueError(f"unknown directive '{key}'")
        except ValueError as exc:
            raise RoomFormatError(line_no, str(exc)) from exc
    if header is None:
        raise RoomFormatError(len(text.splitlines()) + 1, "missing room header")
    try:
        return Room(rows=header[0], cols=header[1], block_size=header[2],
                    missing=frozenset(missing), soft_obstacles=tuple(soft),
                    walls=tuple(walls))
    except ValueError as exc:
        raise RoomFormatError(1, str(exc)) from exc


def serialize_room(room: Room) -> str:
    """Inverse of parse_room; coordinates printed with 6 decimal digits."""
    out = [f"room {room.rows} {room.cols} {room.block_size:.6f}"]
    for b in sorted(room.missing):
        out.append(f"missing {b.row} {b.col}")
    for r in room.soft_obstacles:
        out.append(f"soft {r.lo.x:.6f} {r.lo.y:.6f} {r.hi.x:.6f} {r.hi.y:.6f}")
    for s in room.walls:
        out.append(f"wall {s.a.x:.6f} {s.a.y:.6f} {s.b.x:.6f} {s.b.y:.6f}")
    return "\n".join(out) + "\n"


def load_room(path) -> Room:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_room(fh.read())


def save_room(room: Room, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_room(room))
