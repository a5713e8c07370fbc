"""Planar primitives shared by the room model, placement rules and generators.

All coordinates are in meters. Predicates use a fixed absolute tolerance so
that obstacles generated on grid lines (common in this domain, where every
coordinate is a multiple of half a block) behave predictably: touching a
boundary never counts as crossing it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

EPS = 1e-9


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite point ({self.x}, {self.y})")


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError(f"degenerate segment at {self.a}")


@dataclass(frozen=True)
class Rect:
    """Axis-aligned rectangle given by its min and max corners."""

    lo: Point
    hi: Point

    def __post_init__(self):
        if not (self.lo.x < self.hi.x and self.lo.y < self.hi.y):
            raise ValueError(f"empty rectangle {self.lo}..{self.hi}")

    def diagonals(self) -> tuple[Segment, Segment]:
        return (
            Segment(self.lo, self.hi),
            Segment(Point(self.lo.x, self.hi.y), Point(self.hi.x, self.lo.y)),
        )


@dataclass(frozen=True)
class UnitVec:
    """Unit direction vector; in this package always one of (+-1,0), (0,+-1)."""

    dx: float
    dy: float

    def __post_init__(self):
        if abs(self.dx * self.dx + self.dy * self.dy - 1.0) > EPS:
            raise ValueError(f"not a unit vector ({self.dx}, {self.dy})")

    def dot(self, other: "UnitVec") -> float:
        return self.dx * other.dx + self.dy * other.dy


UP = UnitVec(0.0, 1.0)
DOWN = UnitVec(0.0, -1.0)
LEFT = UnitVec(-1.0, 0.0)
RIGHT = UnitVec(1.0, 0.0)


def distance(p: Point, q: Point) -> float:
    """Euclidean distance in meters."""
    return math.hypot(p.x - q.x, p.y - q.y)


def _orientation(a: Point, b: Point, c: Point) -> int:
    """Sign of the cross product (b-a) x (c-a); 0 within tolerance."""
    cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    if cross > EPS:
        return 1
    if cross < -EPS:
        return -1
    return 0


def _within(a: Point, p: Point, b: Point) -> bool:
    """p is inside the bounding box of a-b (closed, toleranced).

    Callers guarantee p is collinear with a-b.
    """
    return (
        min(a.x, b.x) - EPS <= p.x <= max(a.x, b.x) + EPS
        and min(a.y, b.y) - EPS <= p.y <= max(a.y, b.y) + EPS
    )


def segments_intersect(s: Segment, t: Segment) -> bool:
    """Closed-segment intersection: touching endpoints count."""
    o1 = _orientation(s.a, s.b, t.a)
    o2 = _orientation(s.a, s.b, t.b)
    o3 = _orientation(t.a, t.b, s.a)
    o4 = _orientation(t.a, t.b, s.b)
    if o1 != o2 and o3 != o4:
        return True
    if o1 == 0 and _within(s.a, t.a, s.b):
        return True
    if o2 == 0 and _within(s.a, t.b, s.b):
        return True
    if o3 == 0 and _within(t.a, s.a, t.b):
        return True
    if o4 == 0 and _within(t.a, s.b, t.b):
        return True
    return False


def segment_intersects_rect_interior(s: Segment, r: Rect) -> bool:
    """True iff the segment has a point strictly inside the rectangle.

    Contact limited to the boundary returns False, so a wall lying exactly
    on a grid line does not block the blocks on either side.
    """
    dx = s.b.x - s.a.x
    dy = s.b.y - s.a.y
    # Liang-Barsky clip of the closed segment against the closed rectangle.
    t0, t1 = 0.0, 1.0
    for p, q in (
        (-dx, s.a.x - r.lo.x),
        (dx, r.hi.x - s.a.x),
        (-dy, s.a.y - r.lo.y),
        (dy, r.hi.y - s.a.y),
    ):
        if abs(p) <= EPS:
            if q < -EPS:
                return False
        else:
            t = q / p
            if p < 0:
                if t > t1:
                    return False
                if t > t0:
                    t0 = t
            else:
                if t < t0:
                    return False
                if t < t1:
                    t1 = t
    if t0 > t1:
        return False
    # The clipped midpoint lies strictly inside unless the whole clipped part
    # runs along the boundary (or is a single touching point).
    tm = 0.5 * (t0 + t1)
    mx = s.a.x + tm * dx
    my = s.a.y + tm * dy
    return (
        r.lo.x + EPS < mx < r.hi.x - EPS and r.lo.y + EPS < my < r.hi.y - EPS
    )


def rects_overlap_interior(a: Rect, b: Rect) -> bool:
    """True iff the open interiors of two rectangles intersect."""
    return (
        min(a.hi.x, b.hi.x) - max(a.lo.x, b.lo.x) > EPS
        and min(a.hi.y, b.hi.y) - max(a.lo.y, b.lo.y) > EPS
    )
