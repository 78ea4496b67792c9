"""Cheeger constant and Cheeger set of convex regions.

For a bounded convex plane region the Cheeger set is the union of all balls
of radius r = 1/h contained in it, obtained as the outward offset of the
inner parallel body at the unique depth where that body's area equals
pi*r^2.  Inner parallel bodies are built by direct inward offsetting with
vertex clipping; edges that collapse are dropped and their neighbours
re-intersected, so the area is exact (piecewise quadratic in r).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence

from . import geom
from .errors import EmptyInnerSet, InvalidGeometry, PropertyViolation
from .geom import Arc, ArcPolygon, Segment, Vec2
from .solver import DEFAULT_TOL, CheegerSolution, _bisect_inner_root


@dataclass(frozen=True)
class ConvexRegion:
    region: ArcPolygon

    def __post_init__(self) -> None:
        if not geom.is_convex(self.region):
            raise InvalidGeometry("region is not convex")

    @property
    def area(self) -> float:
        return self.region.area

    @property
    def perimeter(self) -> float:
        return self.region.perimeter

    def scaled(self, k: float) -> "ConvexRegion":
        return ConvexRegion(self.region.scaled(k))


def convex_from_points(points: Sequence[Vec2]) -> ConvexRegion:
    return ConvexRegion(geom.polygon_from_points(list(points)))


def convex_disk(center: Vec2, radius: float, arcs: int = 4) -> ConvexRegion:
    return ConvexRegion(geom.disk(center, radius, arcs))


# ---------------------------------------------------------------------------
# inner parallel body by inward offsetting with vertex clipping


class _Support:
    """Supporting curve of one inward-offset boundary piece."""

    __slots__ = ("is_line", "point", "direction", "center", "radius",
                 "hint_start", "hint_end", "orig_sweep", "orig_length")

    def __init__(self, piece, depth: float):
        self.hint_start = piece.start
        self.hint_end = piece.end
        self.orig_length = piece.length
        if isinstance(piece, Segment):
            self.is_line = True
            d = piece.direction()
            self.point = piece.start + depth * d.perp()
            self.direction = d
            self.center = None
            self.radius = 0.0
            self.orig_sweep = 0.0
        else:
            self.is_line = False
            self.point = None
            self.direction = None
            self.center = piece.center
            self.radius = piece.radius - depth
            self.orig_sweep = piece.sweep


def _support_vertex(a: _Support, b: _Support, hint: Vec2) -> Optional[Vec2]:
    if a.is_line and b.is_line:
        denom = a.direction.cross(b.direction)
        if abs(denom) < 1e-14:
            return None
        t = (b.point - a.point).cross(b.direction) / denom
        return a.point + a.direction * t
    if a.is_line or b.is_line:
        line, circ = (a, b) if a.is_line else (b, a)
        ts = geom._line_circle(line.point, line.direction, circ.center,
                               circ.radius)
        if not ts:
            return None
        cands = [line.point + line.direction * t for t in ts]
        return min(cands, key=lambda q: q.distance(hint))
    same_center = a.center.distance(b.center) <= 1e-12 * (a.radius + b.radius + 1.0)
    if same_center and abs(a.radius - b.radius) <= 1e-12 * (a.radius + 1.0):
        return a.center + a.radius * (hint - a.center).unit()
    pts = geom._circle_circle(a.center, a.radius, b.center, b.radius)
    if not pts:
        return None
    return min(pts, key=lambda q: q.distance(hint))


def inner_parallel_body(c: ConvexRegion, r: float) -> ConvexRegion:
    """Points of the region at distance at least r from its boundary."""
    if r < 0.0:
        raise InvalidGeometry("depth must be nonnegative")
    if r == 0.0:
        return c
    scale = max(c.region.diameter, 1.0)
    tol = 1e-12 * scale
    supports: List[_Support] = []
    for piece in c.region.pieces:
        s = _Support(piece, r)
        if not s.is_line and s.radius <= tol:
            continue  # arc swallowed by the offset
        supports.append(s)
    while True:
        n = len(supports)
        if n < 2:
            raise EmptyInnerSet(f"inner parallel body empty at depth {r}")
        vertices: List[Optional[Vec2]] = []
        failed = -1
        for i in range(n):
            j = (i + 1) % n
            hint = (supports[i].hint_end + supports[j].hint_start) * 0.5
            v = _support_vertex(supports[i], supports[j], hint)
            if v is None:
                failed = i
                break
            vertices.append(v)
        if failed >= 0:
            j = (failed + 1) % n
            drop = failed if supports[failed].orig_length <= \
                supports[j].orig_length else j
            del supports[drop]
            continue
        worst = -1
        worst_span = math.inf
        spans: List[float] = []
        for i in range(n):
            v_prev = vertices[(i - 1) % n]
            v_next = vertices[i]
            s = supports[i]
            if s.is_line:
                span = (v_next - v_prev).dot(s.direction)
            else:
                a0 = (v_prev - s.center).angle()
                a1 = (v_next - s.center).angle()
                span = (a1 - a0) % geom.TAU
                if span > s.orig_sweep + 0.5:
                    span = -1.0  # flipped past its original span
            spans.append(span)
            if span < worst_span:
                worst_span = span
                worst = i
        if worst_span <= tol:
            del supports[worst]
            continue
        pieces: List = []
        for i in range(n):
            v_prev = vertices[(i - 1) % n]
            v_next = vertices[i]
            s = supports[i]
            if s.is_line:
                pieces.append(Segment(v_prev, v_next))
            else:
                a0 = (v_prev - s.center).angle()
                pieces.append(Arc.from_angles(s.center, s.radius, a0, spans[i]))
        try:
            return ConvexRegion(ArcPolygon(pieces))
        except InvalidGeometry as exc:
            raise EmptyInnerSet(
                f"inner parallel body degenerates at depth {r}: {exc}") from exc


def inradius(c: ConvexRegion, tol: float = 1e-12) -> float:
    """Largest depth with a nonempty inner parallel body, by bisection."""
    x0, y0, x1, y1 = c.region.bounding_box
    hi = 0.5 * min(x1 - x0, y1 - y0) * (1.0 + 1e-9)
    lo = 0.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        try:
            inner_parallel_body(c, mid)
            lo = mid
        except EmptyInnerSet:
            hi = mid
        if hi - lo <= tol * max(hi, 1.0):
            break
    return lo


def solve_convex(c: ConvexRegion, tol: float = DEFAULT_TOL) -> CheegerSolution:
    """Cheeger constant and Cheeger set of a convex region.

    r solves area(inner_parallel_body(r)) = pi*r^2 by bisection; the
    Cheeger set is the inner body offset back outward by r and is verified
    to stay inside the region by sampled containment.
    """

    def measure(r: float) -> Optional[float]:
        try:
            return inner_parallel_body(c, r).area
        except EmptyInnerSet:
            return None

    hi = math.sqrt(c.area / math.pi)
    r, iterations = _bisect_inner_root(measure, 1e-12 * hi, hi, tol)
    e_r = inner_parallel_body(c, r).region
    residual = abs(e_r.area - math.pi * r * r)
    cheeger = geom.offset_outward_disk(e_r, r, reach_bound=math.inf)
    scale = max(c.region.diameter, 1.0)
    for piece in cheeger.pieces:
        for u in (0.0, 0.25, 0.5, 0.75):
            pt = piece.point_at(u)
            if geom.distance_to_boundary(c.region, pt) < -1e-9 * scale:
                raise PropertyViolation(
                    "Cheeger set escapes the region at "
                    f"({pt.x:.6g}, {pt.y:.6g})")
    return CheegerSolution(r=r, h=1.0 / r, inner_set=e_r, cheeger_set=cheeger,
                           residual=residual, iterations=iterations,
                           bounds=None)
