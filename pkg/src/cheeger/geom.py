"""Exact planar kernel for regions bounded by line segments and circular arcs.

Areas and perimeters are closed-form (Green's theorem with circular-segment
terms), offsets by a disk stay inside the same representation, and distance
queries are per-piece projections.  Everything is immutable and pure.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .errors import InvalidGeometry, ReachViolation, SelfIntersecting

TAU = 2.0 * math.pi

# Relative tolerance for endpoint coincidence / on-circle checks.
REL_TOL = 1e-12
# Angular tolerance used when classifying junction turns.
ANG_TOL = 1e-9


@dataclass(frozen=True)
class Vec2:
    """Point or displacement in the plane."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise InvalidGeometry(f"non-finite coordinates ({self.x}, {self.y})")

    def __add__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x - other.x, self.y - other.y)

    def __mul__(self, k: float) -> "Vec2":
        return Vec2(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __neg__(self) -> "Vec2":
        return Vec2(-self.x, -self.y)

    def dot(self, other: "Vec2") -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Vec2") -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def unit(self) -> "Vec2":
        n = self.norm()
        if n == 0.0:
            raise InvalidGeometry("cannot normalize the zero vector")
        return Vec2(self.x / n, self.y / n)

    def perp(self) -> "Vec2":
        """Rotate by +90 degrees (counterclockwise)."""
        return Vec2(-self.y, self.x)

    def angle(self) -> float:
        return math.atan2(self.y, self.x)

    def rotated(self, phi: float) -> "Vec2":
        c, s = math.cos(phi), math.sin(phi)
        return Vec2(c * self.x - s * self.y, s * self.x + c * self.y)

    def distance(self, other: "Vec2") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


Point2 = Vec2


def unit_from_angle(phi: float) -> Vec2:
    return Vec2(math.cos(phi), math.sin(phi))


@dataclass(frozen=True)
class Segment:
    start: Vec2
    end: Vec2

    def __post_init__(self) -> None:
        if self.start.distance(self.end) == 0.0:
            raise InvalidGeometry("zero-length segment")

    @property
    def kind(self) -> str:
        return "segment"

    @property
    def length(self) -> float:
        return self.start.distance(self.end)

    def direction(self) -> Vec2:
        return (self.end - self.start).unit()

    def point_at(self, u: float) -> Vec2:
        return self.start + (self.end - self.start) * u

    def tangent_at(self, u: float) -> Vec2:
        return self.direction()

    def tangent_at_start(self) -> Vec2:
        return self.direction()

    def tangent_at_end(self) -> Vec2:
        return self.direction()

    def reversed(self) -> "Segment":
        return Segment(self.end, self.start)

    def translated(self, v: Vec2) -> "Segment":
        return Segment(self.start + v, self.end + v)

    def scaled(self, k: float) -> "Segment":
        return Segment(self.start * k, self.end * k)

    def subpiece(self, u0: float, u1: float) -> "Segment":
        return Segment(self.point_at(u0), self.point_at(u1))

    def bbox(self) -> tuple:
        return (min(self.start.x, self.end.x), min(self.start.y, self.end.y),
                max(self.start.x, self.end.x), max(self.start.y, self.end.y))


@dataclass(frozen=True)
class Arc:
    """Circular arc from `start` to `end` around `center`.

    `ccw` gives the traversal sense, `sweep` the positive opening angle in
    (0, 2*pi).  Full circles are represented by two or more arcs.
    """

    start: Vec2
    end: Vec2
    center: Vec2
    radius: float
    ccw: bool
    sweep: float

    def __post_init__(self) -> None:
        if not (self.radius > 0.0 and math.isfinite(self.radius)):
            raise InvalidGeometry(f"arc radius must be positive, got {self.radius}")
        if not (0.0 < self.sweep < TAU):
            raise InvalidGeometry(f"arc sweep must lie in (0, 2*pi), got {self.sweep}")
        scale = self.radius + abs(self.center.x) + abs(self.center.y) + 1.0
        for p in (self.start, self.end):
            if abs(p.distance(self.center) - self.radius) > 1e-12 * scale:
                raise InvalidGeometry("arc endpoint does not lie on its circle")

    @property
    def kind(self) -> str:
        return "arc"

    @property
    def orientation(self) -> str:
        return "ccw" if self.ccw else "cw"

    @property
    def length(self) -> float:
        return self.radius * self.sweep

    @property
    def signed_sweep(self) -> float:
        return self.sweep if self.ccw else -self.sweep

    @property
    def start_angle(self) -> float:
        return (self.start - self.center).angle()

    @property
    def end_angle(self) -> float:
        return (self.end - self.center).angle()

    @staticmethod
    def from_angles(center: Vec2, radius: float, start_angle: float,
                    signed_sweep: float) -> "Arc":
        a1 = start_angle + signed_sweep
        return Arc(center + radius * unit_from_angle(start_angle),
                   center + radius * unit_from_angle(a1),
                   center, radius, signed_sweep > 0.0, abs(signed_sweep))

    def angle_at(self, u: float) -> float:
        return self.start_angle + self.signed_sweep * u

    def point_at(self, u: float) -> Vec2:
        return self.center + self.radius * unit_from_angle(self.angle_at(u))

    def tangent_at(self, u: float) -> Vec2:
        radial = unit_from_angle(self.angle_at(u))
        return radial.perp() if self.ccw else -radial.perp()

    def tangent_at_start(self) -> Vec2:
        return self.tangent_at(0.0)

    def tangent_at_end(self) -> Vec2:
        return self.tangent_at(1.0)

    def angle_offset(self, phi: float) -> float:
        """Angular distance from the start of the arc, along its sense."""
        if self.ccw:
            return (phi - self.start_angle) % TAU
        return (self.start_angle - phi) % TAU

    def contains_angle(self, phi: float, slop: float = 1e-9) -> bool:
        off = self.angle_offset(phi)
        return off <= self.sweep + slop or off >= TAU - slop

    def reversed(self) -> "Arc":
        return Arc(self.end, self.start, self.center, self.radius,
                   not self.ccw, self.sweep)

    def translated(self, v: Vec2) -> "Arc":
        return Arc(self.start + v, self.end + v, self.center + v,
                   self.radius, self.ccw, self.sweep)

    def scaled(self, k: float) -> "Arc":
        return Arc(self.start * k, self.end * k, self.center * k,
                   self.radius * k, self.ccw, self.sweep)

    def subpiece(self, u0: float, u1: float) -> "Arc":
        return Arc.from_angles(self.center, self.radius, self.angle_at(u0),
                               self.signed_sweep * (u1 - u0))

    def bbox(self) -> tuple:
        xs = [self.start.x, self.end.x]
        ys = [self.start.y, self.end.y]
        for k, phi in enumerate((0.0, 0.5 * math.pi, math.pi, 1.5 * math.pi)):
            if self.contains_angle(phi):
                p = self.center + self.radius * unit_from_angle(phi)
                xs.append(p.x)
                ys.append(p.y)
        return (min(xs), min(ys), max(xs), max(ys))


BoundaryPiece = Union[Segment, Arc]


def arc_between(start: Vec2, end: Vec2, center: Vec2, ccw: bool) -> Arc:
    """Arc through two given points; sweep is inferred from the angles."""
    radius = start.distance(center)
    a0 = (start - center).angle()
    a1 = (end - center).angle()
    sweep = (a1 - a0) % TAU if ccw else (a0 - a1) % TAU
    if sweep == 0.0:
        sweep = TAU  # antipodal rounding; caller must avoid true full circles
    return Arc(start, end, center, radius, ccw, sweep)


class ArcPolygon:
    """Closed counterclockwise loop of segments and circular arcs.

    Clockwise input is reversed on construction.  Consecutive pieces must
    share endpoints to within 1e-12 of the loop diameter.
    """

    __slots__ = ("pieces", "_area", "_perimeter", "_bbox")

    def __init__(self, pieces: Sequence[BoundaryPiece]):
        pieces = tuple(pieces)
        if len(pieces) < 2:
            raise InvalidGeometry("an arc-polygon needs at least two pieces")
        xs, ys = [], []
        for p in pieces:
            x0, y0, x1, y1 = p.bbox()
            xs += [x0, x1]
            ys += [y0, y1]
        diam = math.hypot(max(xs) - min(xs), max(ys) - min(ys))
        if diam == 0.0:
            raise InvalidGeometry("degenerate (zero-diameter) loop")
        # closure roundoff scales with coordinate magnitude, not loop size
        coord = max(abs(v) for v in xs + ys)
        tol = max(diam, coord, 1e-9) * REL_TOL * 16.0
        n = len(pieces)
        for i in range(n):
            gap = pieces[i].end.distance(pieces[(i + 1) % n].start)
            if gap > tol:
                raise InvalidGeometry(
                    f"loop not closed at junction {i}: gap {gap:.3e} exceeds {tol:.3e}")
        a = _signed_area(pieces)
        if a < 0.0:
            pieces = tuple(p.reversed() for p in reversed(pieces))
            a = -a
        if a <= (diam * REL_TOL) ** 2:
            raise InvalidGeometry("loop encloses no area")
        self.pieces = pieces
        self._area = a
        self._perimeter = sum(p.length for p in pieces)
        self._bbox = (min(xs), min(ys), max(xs), max(ys))

    @property
    def area(self) -> float:
        return self._area

    @property
    def perimeter(self) -> float:
        return self._perimeter

    @property
    def bounding_box(self) -> tuple:
        return self._bbox

    @property
    def diameter(self) -> float:
        x0, y0, x1, y1 = self._bbox
        return math.hypot(x1 - x0, y1 - y0)

    def vertices(self) -> list:
        return [p.start for p in self.pieces]

    def reversed_loop(self) -> "ArcPolygon":
        return ArcPolygon(tuple(p.reversed() for p in reversed(self.pieces)))

    def translated(self, v: Vec2) -> "ArcPolygon":
        return ArcPolygon(tuple(p.translated(v) for p in self.pieces))

    def scaled(self, k: float) -> "ArcPolygon":
        if k <= 0.0:
            raise InvalidGeometry("scale factor must be positive")
        return ArcPolygon(tuple(p.scaled(k) for p in self.pieces))

    def __repr__(self) -> str:
        return f"ArcPolygon({len(self.pieces)} pieces, area={self._area:.6g})"


def _signed_area(pieces: Sequence[BoundaryPiece]) -> float:
    # anchor at the first vertex; the integral is translation invariant and
    # local coordinates avoid cancellation on small far-from-origin loops
    ref = pieces[0].start
    total = 0.0
    for p in pieces:
        a = p.start - ref
        b = p.end - ref
        if isinstance(p, Segment):
            total += 0.5 * a.cross(b)
        else:
            d = p.signed_sweep
            c = p.center - ref
            total += 0.5 * (p.radius * p.radius * d
                            + c.x * (b.y - a.y) - c.y * (b.x - a.x))
    return total


def area(p: ArcPolygon) -> float:
    """Enclosed area; positive for the normalized counterclockwise loop."""
    return p.area


def perimeter(p: ArcPolygon) -> float:
    """Total boundary length: segment lengths plus radius*sweep per arc."""
    return p.perimeter


# ---------------------------------------------------------------------------
# point queries


def _chord_winding(a: Vec2, b: Vec2) -> float:
    return math.atan2(a.cross(b), a.dot(b))


def _piece_winding(piece: BoundaryPiece, x: Vec2) -> float:
    w = _chord_winding(piece.start - x, piece.end - x)
    if isinstance(piece, Arc):
        inside = x.distance(piece.center) < piece.radius
        if inside:
            side = (piece.end - piece.start).cross(x - piece.start)
            if piece.ccw and side < 0.0:
                w += TAU
            elif not piece.ccw and side > 0.0:
                w -= TAU
    return w


def winding_number(p: ArcPolygon, x: Vec2) -> float:
    return sum(_piece_winding(piece, x) for piece in p.pieces) / TAU


def contains(p: ArcPolygon, x: Vec2) -> bool:
    return winding_number(p, x) > 0.5


def point_to_segment(x: Vec2, s: Segment) -> tuple:
    d = s.end - s.start
    dd = d.dot(d)
    if dd == 0.0:
        return x.distance(s.start), s.start
    t = (x - s.start).dot(d) / dd
    t = 0.0 if t < 0.0 else (1.0 if t > 1.0 else t)
    foot = s.point_at(t)
    return x.distance(foot), foot


def point_to_arc(x: Vec2, a: Arc) -> tuple:
    v = x - a.center
    r = v.norm()
    if r > 1e-300:
        phi = v.angle()
        if a.contains_angle(phi):
            q = a.center + a.radius * (v * (1.0 / r))
            return abs(r - a.radius), q
    d0 = x.distance(a.start)
    d1 = x.distance(a.end)
    return (d0, a.start) if d0 <= d1 else (d1, a.end)


def point_to_piece(x: Vec2, piece: BoundaryPiece) -> tuple:
    if isinstance(piece, Segment):
        return point_to_segment(x, piece)
    return point_to_arc(x, piece)


def distance_to_boundary(p: ArcPolygon, x: Vec2) -> float:
    """Signed distance to the boundary: positive inside, negative outside."""
    best = math.inf
    for piece in p.pieces:
        d, _ = point_to_piece(x, piece)
        if d < best:
            best = d
    return best if contains(p, x) else -best


# ---------------------------------------------------------------------------
# piece/piece distances and intersections


def _segment_intersection(a: Segment, b: Segment) -> Optional[Vec2]:
    p, r = a.start, a.end - a.start
    q, s = b.start, b.end - b.start
    denom = r.cross(s)
    if denom == 0.0:
        return None
    t = (q - p).cross(s) / denom
    u = (q - p).cross(r) / denom
    if -1e-12 <= t <= 1.0 + 1e-12 and -1e-12 <= u <= 1.0 + 1e-12:
        return p + r * t
    return None


def _line_circle(p0: Vec2, d: Vec2, center: Vec2, radius: float) -> list:
    """Parameters t with |p0 + t*d - center| = radius (d need not be unit)."""
    f = p0 - center
    aa = d.dot(d)
    bb = 2.0 * f.dot(d)
    cc = f.dot(f) - radius * radius
    disc = bb * bb - 4.0 * aa * cc
    if disc < 0.0:
        return []
    root = math.sqrt(disc)
    return [(-bb - root) / (2.0 * aa), (-bb + root) / (2.0 * aa)]


def _circle_circle(c1: Vec2, r1: float, c2: Vec2, r2: float) -> list:
    d = c2 - c1
    dist = d.norm()
    if dist == 0.0:
        return []
    a = (r1 * r1 - r2 * r2 + dist * dist) / (2.0 * dist)
    h2 = r1 * r1 - a * a
    if h2 < 0.0:
        return []
    u = d * (1.0 / dist)
    mid = c1 + u * a
    h = math.sqrt(max(h2, 0.0))
    if h == 0.0:
        return [mid]
    off = u.perp() * h
    return [mid + off, mid - off]


def piece_distance(a: BoundaryPiece, b: BoundaryPiece) -> tuple:
    """Minimal distance between two pieces with the realizing points."""
    if isinstance(a, Segment) and isinstance(b, Segment):
        x = _segment_intersection(a, b)
        if x is not None:
            return 0.0, x, x
        cands = []
        for pt in (a.start, a.end):
            d, q = point_to_segment(pt, b)
            cands.append((d, pt, q))
        for pt in (b.start, b.end):
            d, q = point_to_segment(pt, a)
            cands.append((d, q, pt))
        return min(cands, key=lambda c: c[0])
    if isinstance(a, Segment):
        d, pb, pa = piece_distance(b, a)
        return d, pa, pb
    if isinstance(b, Segment):
        seg, arc = b, a
        dvec = seg.end - seg.start
        for t in _line_circle(seg.start, dvec, arc.center, arc.radius):
            if -1e-12 <= t <= 1.0 + 1e-12:
                pt = seg.point_at(min(max(t, 0.0), 1.0))
                if arc.contains_angle((pt - arc.center).angle()):
                    return 0.0, pt, pt
        cands = []
        for pt in (seg.start, seg.end):
            d, q = point_to_arc(pt, arc)
            cands.append((d, q, pt))
        for pt in (arc.start, arc.end):
            d, q = point_to_segment(pt, seg)
            cands.append((d, pt, q))
        t = (arc.center - seg.start).dot(dvec) / dvec.dot(dvec)
        if 0.0 < t < 1.0:
            foot = seg.point_at(t)
            v = foot - arc.center
            if v.norm() > 1e-300:
                q = arc.center + arc.radius * v.unit()
                if arc.contains_angle((q - arc.center).angle()):
                    cands.append((q.distance(foot), q, foot))
        best = min(cands, key=lambda c: c[0])
        return best[0], best[1], best[2]
    # arc/arc
    for x in _circle_circle(a.center, a.radius, b.center, b.radius):
        if a.contains_angle((x - a.center).angle()) and \
           b.contains_angle((x - b.center).angle()):
            return 0.0, x, x
    cands = []
    for pt in (a.start, a.end):
        d, q = point_to_arc(pt, b)
        cands.append((d, pt, q))
    for pt in (b.start, b.end):
        d, q = point_to_arc(pt, a)
        cands.append((d, q, pt))
    sep = b.center - a.center
    dist = sep.norm()
    if dist > 1e-12 * (a.radius + b.radius):
        u = sep * (1.0 / dist)
        for pa in (a.center + u * a.radius, a.center - u * a.radius):
            if not a.contains_angle((pa - a.center).angle()):
                continue
            for pb in (b.center + u * b.radius, b.center - u * b.radius):
                if b.contains_angle((pb - b.center).angle()):
                    cands.append((pa.distance(pb), pa, pb))
    else:
        # near-concentric: radial gap wherever the angular spans overlap
        for phi in (a.start_angle, a.end_angle, b.start_angle, b.end_angle):
            if a.contains_angle(phi) and b.contains_angle(phi):
                pa = a.center + a.radius * unit_from_angle(phi)
                pb = b.center + b.radius * unit_from_angle(phi)
                cands.append((pa.distance(pb), pa, pb))
    return min(cands, key=lambda c: c[0])


def _bbox_gap(b1: tuple, b2: tuple) -> float:
    dx = max(b1[0] - b2[2], b2[0] - b1[2], 0.0)
    dy = max(b1[1] - b2[3], b2[1] - b1[3], 0.0)
    return math.hypot(dx, dy)


def assert_simple(p: ArcPolygon, tol: Optional[float] = None) -> None:
    """Raise SelfIntersecting if non-adjacent pieces touch or cross."""
    if tol is None:
        tol = 1e-9 * p.diameter
    pieces = p.pieces
    n = len(pieces)
    boxes = [q.bbox() for q in pieces]
    for i in range(n):
        for j in range(i + 1, n):
            if j == i + 1 or (i == 0 and j == n - 1):
                continue
            if _bbox_gap(boxes[i], boxes[j]) > tol:
                continue
            d, _, _ = piece_distance(pieces[i], pieces[j])
            if d <= tol:
                raise SelfIntersecting(
                    f"pieces {i} and {j} approach within {d:.3e}")


# ---------------------------------------------------------------------------
# turning, convexity, reach


def junction_turns(p: ArcPolygon) -> list:
    """Signed tangent turn at every junction (piece i end to piece i+1 start)."""
    turns = []
    n = len(p.pieces)
    for i in range(n):
        t_in = p.pieces[i].tangent_at_end()
        t_out = p.pieces[(i + 1) % n].tangent_at_start()
        turns.append(math.atan2(t_in.cross(t_out), t_in.dot(t_out)))
    return turns


def is_convex(p: ArcPolygon, ang_tol: float = ANG_TOL) -> bool:
    if any(isinstance(q, Arc) and not q.ccw for q in p.pieces):
        return False
    return all(t >= -ang_tol for t in junction_turns(p))


def reach_lower_bound(p: ArcPolygon) -> float:
    """Certified lower bound on the reach of the closed region.

    Convex regions have infinite reach.  A concave (reflex) vertex gives
    zero.  Otherwise the bound is the minimum of all concave arc radii and
    half the distance of every genuine outside bottleneck: a non-adjacent
    piece pair whose midpoint lies outside at distance about half the pair
    gap, so nothing else is closer to it.
    """
    if is_convex(p):
        return math.inf
    if any(t < -ANG_TOL for t in junction_turns(p)):
        return 0.0
    best = math.inf
    for q in p.pieces:
        if isinstance(q, Arc) and not q.ccw:
            best = min(best, q.radius)
    pieces = p.pieces
    n = len(pieces)
    boxes = [q.bbox() for q in pieces]
    for i in range(n):
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            if _bbox_gap(boxes[i], boxes[j]) >= 2.0 * best:
                continue
            d, pa, pb = piece_distance(pieces[i], pieces[j])
            if d >= 2.0 * best or d == 0.0:
                continue
            mid = (pa + pb) * 0.5
            sd = distance_to_boundary(p, mid)
            if sd < 0.0 and -sd >= 0.5 * d * (1.0 - 1e-6):
                best = min(best, 0.5 * d)
    return best


def reach_lower_bound_union(polys: Sequence[ArcPolygon]) -> float:
    """Certified reach bound for a disjoint union of regions."""
    best = min(reach_lower_bound(q) for q in polys)
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            d = math.inf
            for a in polys[i].pieces:
                for b in polys[j].pieces:
                    dd, _, _ = piece_distance(a, b)
                    d = min(d, dd)
            best = min(best, 0.5 * d)
    return best


# ---------------------------------------------------------------------------
# outward disk offset (Minkowski sum with a ball)


def _outward_normal_at_end(piece: BoundaryPiece) -> Vec2:
    return -piece.tangent_at_end().perp()


def _outward_normal_at_start(piece: BoundaryPiece) -> Vec2:
    return -piece.tangent_at_start().perp()


def offset_outward_disk(p: ArcPolygon, rho: float,
                        reach_bound: Optional[float] = None) -> ArcPolygon:
    """Minkowski sum of the region with a closed disk of radius rho.

    Segments translate outward, counterclockwise arcs grow by rho, clockwise
    arcs shrink by rho, and every convex junction gains a vertex arc.  The
    result satisfies the Steiner identities
        area' = area + rho*perimeter + pi*rho^2
        perimeter' = perimeter + 2*pi*rho
    whenever rho does not exceed the reach of the region.
    """
    if rho < 0.0:
        raise InvalidGeometry("offset distance must be nonnegative")
    if rho == 0.0:
        return p
    if reach_bound is None:
        reach_bound = reach_lower_bound(p)
    if reach_bound < rho * (1.0 - 1e-12):
        raise ReachViolation(
            f"offset {rho} exceeds certified reach {reach_bound}")
    scale = p.diameter
    offset_pieces: list = []
    for piece in p.pieces:
        if isinstance(piece, Segment):
            nrm = _outward_normal_at_start(piece)
            a = piece.start + nrm * rho
            b = piece.end + nrm * rho
            # a segment far shorter than its coordinates can collapse when
            # translated; it contributes nothing to the offset boundary
            offset_pieces.append((piece, Segment(a, b))
                                 if a.distance(b) > 0.0 else (piece, None))
        elif piece.ccw:
            offset_pieces.append((piece, Arc.from_angles(
                piece.center, piece.radius + rho, piece.start_angle,
                piece.signed_sweep)))
        else:
            new_r = piece.radius - rho
            if new_r <= 1e-12 * max(scale, 1.0):
                offset_pieces.append((piece, None))  # arc collapses to a point
            else:
                offset_pieces.append((piece, Arc.from_angles(
                    piece.center, new_r, piece.start_angle, piece.signed_sweep)))
    out: list = []
    n = len(offset_pieces)
    for i in range(n):
        orig, off = offset_pieces[i]
        if off is not None:
            out.append(off)
        nxt_orig, _ = offset_pieces[(i + 1) % n]
        t_in = orig.tangent_at_end()
        t_out = nxt_orig.tangent_at_start()
        turn = math.atan2(t_in.cross(t_out), t_in.dot(t_out))
        if turn > ANG_TOL:
            vertex = orig.end
            a0 = _outward_normal_at_end(orig).angle()
            out.append(Arc.from_angles(vertex, rho, a0, turn))
        elif turn < -1e-7:
            raise ReachViolation(
                f"concave junction at piece {i} cannot be offset outward")
    return ArcPolygon(out)


# ---------------------------------------------------------------------------
# constructors used throughout tests, the gallery and the CLI


def polygon_from_points(points: Sequence[Vec2]) -> ArcPolygon:
    n = len(points)
    if n < 3:
        raise InvalidGeometry("need at least three vertices")
    return ArcPolygon([Segment(points[i], points[(i + 1) % n]) for i in range(n)])


def disk(center: Vec2, radius: float, arcs: int = 4) -> ArcPolygon:
    if arcs < 2:
        raise InvalidGeometry("a disk needs at least two arcs")
    step = TAU / arcs
    return ArcPolygon([Arc.from_angles(center, radius, i * step, step)
                       for i in range(arcs)])


def round_corners(p: ArcPolygon, radius: float,
                  corners: Optional[Iterable[int]] = None) -> ArcPolygon:
    """Replace convex segment junctions by tangent arcs of the given radius.

    `corners` indexes junctions (piece i end); by default every junction
    with a positive turn is rounded.  Adjacent pieces must be segments long
    enough to absorb the tangent cut.
    """
    turns = junction_turns(p)
    n = len(p.pieces)
    if corners is None:
        idx = sorted(i for i in range(n) if turns[i] > ANG_TOL)
    else:
        idx = sorted(set(corners))
    cut_start = [0.0] * n
    cut_end = [0.0] * n
    inserts: dict = {}
    for i in idx:
        j = (i + 1) % n
        a, b = p.pieces[i], p.pieces[j]
        if not (isinstance(a, Segment) and isinstance(b, Segment)):
            raise InvalidGeometry("can only round corners between segments")
        turn = turns[i]
        if turn <= ANG_TOL:
            raise InvalidGeometry(f"junction {i} is not convex")
        cut = radius * math.tan(0.5 * turn)
        cut_end[i] = cut
        cut_start[j] = cut
        vertex = a.end
        bisector = (b.direction() - a.direction()).unit()
        center = vertex + (radius / math.cos(0.5 * turn)) * bisector
        a0 = _outward_normal_at_end(a).angle()
        inserts[i] = Arc.from_angles(center, radius, a0, turn)
    out: list = []
    for i, piece in enumerate(p.pieces):
        if cut_start[i] or cut_end[i]:
            if cut_start[i] + cut_end[i] >= piece.length:
                raise InvalidGeometry(f"fillet radius {radius} too large at piece {i}")
            u0 = cut_start[i] / piece.length
            u1 = 1.0 - cut_end[i] / piece.length
            out.append(piece.subpiece(u0, u1))
        else:
            out.append(piece)
        if i in inserts:
            out.append(inserts[i])
    return ArcPolygon(out)
