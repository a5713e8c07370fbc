"""Seeded generation of the benchmark room families.

Three families: plain square rooms (``n_n_nowalls``), rooms with randomly
placed walls (``n_n_t_w_id``), and rooms with a deterministic uniform wall
pattern (``n_n_uni_t``). All coordinates produced are multiples of half a
block. Walls are axis-aligned segments of length ``0.7 * t``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .geometry import EPS, Point, Segment
from .room import DEFAULT_BLOCK_SIZE, Room

MAX_CONSECUTIVE_REJECTIONS = 10_000
PARALLEL_CLEARANCE = 1.4  # two parallel walls must leave room for a table
BOUNDARY_MARGIN = 0.35
ROW_GAP = 0.7


class WallGenerationError(RuntimeError):
    """Raised when rejection sampling cannot fit the requested walls."""


@dataclass(frozen=True)
class WallSpec:
    n: int  # grid side
    t: int  # wall length in blocks
    w: int  # number of walls
    seed: int

    def __post_init__(self):
        if self.n < 2 or self.t < 1 or self.w < 0:
            raise ValueError(f"invalid wall spec {self}")


def instance_name_nowalls(n: int) -> str:
    return f"{n}_{n}_nowalls"


def instance_name_random(spec: WallSpec) -> str:
    return f"{spec.n}_{spec.n}_{spec.t}_{spec.w}_{spec.seed}"


def instance_name_uniform(n: int, t: int) -> str:
    return f"{n}_{n}_uni_{t}"


def generate_nowalls(n: int) -> Room:
    if n < 2:
        raise ValueError(f"room side must be at least 2, got {n}")
    return Room(rows=n, cols=n, block_size=DEFAULT_BLOCK_SIZE)


def _is_vertical(s: Segment) -> bool:
    return abs(s.a.x - s.b.x) <= EPS


def _violates_parallel_clearance(candidate: Segment, walls) -> bool:
    """Same-orientation walls whose axis projections strictly overlap must
    be at least PARALLEL_CLEARANCE apart in the perpendicular direction."""
    vert = _is_vertical(candidate)
    if vert:
        lo, hi = sorted((candidate.a.y, candidate.b.y))
        perp = candidate.a.x
    else:
        lo, hi = sorted((candidate.a.x, candidate.b.x))
        perp = candidate.a.y
    for other in walls:
        if _is_vertical(other) != vert:
            continue
        if vert:
            olo, ohi = sorted((other.a.y, other.b.y))
            operp = other.a.x
        else:
            olo, ohi = sorted((other.a.x, other.b.x))
            operp = other.a.y
        if min(hi, ohi) - max(lo, olo) <= EPS:
            continue  # projections only touch or are disjoint
        if abs(perp - operp) < PARALLEL_CLEARANCE - EPS:
            return True
    return False


_DIRECTIONS = ((1, 0), (0, 1), (-1, 0), (0, -1))  # theta = 0, pi/2, pi, 3pi/2


def generate_random_walls(spec: WallSpec) -> Room:
    """Rejection sampling of w walls.

    Each attempt draws a block, one of its four side midpoints as the first
    endpoint, and one of the four axis directions; the wall is kept when the
    second endpoint stays inside the room and the parallel clearance rule
    holds against every accepted wall. Deterministic for a fixed seed.
    """
    rng = random.Random(spec.seed)
    L = DEFAULT_BLOCK_SIZE
    side = spec.n * L
    length = spec.t * L
    walls: list[Segment] = []
    rejections = 0
    while len(walls) < spec.w:
        if rejections >= MAX_CONSECUTIVE_REJECTIONS:
            raise WallGenerationError(
                f"gave up after {rejections} consecutive rejections "
                f"({len(walls)}/{spec.w} walls placed) for {spec}")
        row = rng.randrange(1, spec.n + 1)
        col = rng.randrange(1, spec.n + 1)
        cx, cy = (col - 0.5) * L, (row - 0.5) * L
        half = L / 2.0
        mid = rng.randrange(4)  # 0=bottom, 1=right, 2=top, 3=left
        if mid == 0:
            x1, y1 = cx, cy - half
        elif mid == 1:
            x1, y1 = cx + half, cy
        elif mid == 2:
            x1, y1 = cx, cy + half
        else:
            x1, y1 = cx - half, cy
        dx, dy = _DIRECTIONS[rng.randrange(4)]
        x2, y2 = x1 + length * dx, y1 + length * dy
        if not (-EPS <= x2 <= side + EPS and -EPS <= y2 <= side + EPS):
            rejections += 1
            continue
        candidate = Segment(Point(x1, y1), Point(x2, y2))
        if _violates_parallel_clearance(candidate, walls):
            rejections += 1
            continue
        walls.append(candidate)
        rejections = 0
    return Room(rows=spec.n, cols=spec.n, block_size=L, walls=tuple(walls))


def generate_uniform_walls(n: int, t: int, *, col_spacing: float = 2 * ROW_GAP,
                           first_col: float | None = None,
                           margin: float = BOUNDARY_MARGIN,
                           row_gap: float = ROW_GAP) -> Room:
    """Deterministic column-wise wall pattern.

    Vertical walls of length 0.7*t are placed at x = first_col + k*col_spacing
    (default: one free block column between walls, first column one spacing
    in from the margin) as long as x stays at least ``margin`` from the right
    boundary. Within a column, walls stack bottom to top from y = margin with
    ``row_gap`` between consecutive walls, while the top end keeps the margin.
    Zero walls on rooms too small for the pattern is legal.
    """
    if n < 4:
        raise ValueError(f"uniform pattern needs n >= 4, got {n}")
    L = DEFAULT_BLOCK_SIZE
    side = n * L
    length = t * L
    if first_col is None:
        first_col = margin + col_spacing
    walls: list[Segment] = []
    x = first_col
    while x <= side - margin + EPS:
        y = margin
        while y + length <= side - margin + EPS:
            walls.append(Segment(Point(x, y), Point(x, y + length)))
            y += length + row_gap
        x += col_spacing
    return Room(rows=n, cols=n, block_size=L, walls=tuple(walls))


# Parameters reproducing the benchmark's uniform 15-wall layout on the 15x15
# room: five wall columns of three walls each, length four blocks, pattern
# centered with flush vertical margins.
FIG_UNIFORM_15 = dict(n=15, t=4, col_spacing=2.1, first_col=1.05)


def generate_uniform_reference() -> Room:
    params = dict(FIG_UNIFORM_15)
    return generate_uniform_walls(params.pop("n"), params.pop("t"), **params)
